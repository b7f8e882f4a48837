//! Constraint propagation for twist tables.
//!
//! Unknowns are the cells `f(a, b)`; every triple `(a, b, c)` of
//! non-identity elements contributes `f(a,b)·f(ab,c) = φ_a(f(b,c))·f(a,bc)`.
//! Once three cells of a constraint are known the fourth is forced.

use crate::group::FiniteGroup;

const UNSET: usize = usize::MAX;

struct Con {
    a: usize,
    /// `[f(a,b), f(ab,c), f(b,c), f(a,bc)]`
    cells: [usize; 4],
}

pub(crate) struct TwistSolver<'a> {
    kernel: &'a FiniteGroup,
    lift: &'a [Vec<usize>],
    lift_inv: Vec<Vec<usize>>,
    cons: Vec<Con>,
    watch: Vec<Vec<usize>>,
    domains: Vec<Vec<usize>>,
    allowed: Vec<Vec<bool>>,
    values: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> TwistSolver<'a> {
    /// `domains[a * |G| + b]` lists the values allowed in cell `(a, b)`.
    pub(crate) fn new(
        group: &FiniteGroup,
        kernel: &'a FiniteGroup,
        lift: &'a [Vec<usize>],
        domains: Vec<Vec<usize>>,
    ) -> Self {
        let n = group.order();
        let e = group.identity();
        let mut cons = Vec::new();
        let mut watch = vec![Vec::new(); n * n];
        for a in (0..n).filter(|&x| x != e) {
            for b in (0..n).filter(|&x| x != e) {
                let ab = group.mul(a, b);
                for c in (0..n).filter(|&x| x != e) {
                    let bc = group.mul(b, c);
                    let cells = [a * n + b, ab * n + c, b * n + c, a * n + bc];
                    let k = cons.len();
                    for (i, &cell) in cells.iter().enumerate() {
                        if !cells[..i].contains(&cell) {
                            watch[cell].push(k);
                        }
                    }
                    cons.push(Con { a, cells });
                }
            }
        }
        let lift_inv = lift
            .iter()
            .map(|m| {
                let mut inv = vec![0; m.len()];
                for (x, &y) in m.iter().enumerate() {
                    inv[y] = x;
                }
                inv
            })
            .collect();
        let allowed = domains
            .iter()
            .map(|d| {
                let mut row = vec![false; kernel.order()];
                for &x in d {
                    row[x] = true;
                }
                row
            })
            .collect();
        TwistSolver {
            kernel,
            lift,
            lift_inv,
            cons,
            watch,
            domains,
            allowed,
            values: vec![UNSET; n * n],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().expect("trail longer than mark");
            self.values[cell] = UNSET;
        }
        self.queue.clear();
    }

    fn set(&mut self, cell: usize, v: usize) -> bool {
        if !self.allowed[cell][v] {
            return false;
        }
        self.values[cell] = v;
        self.trail.push(cell);
        self.queue.push(cell);
        true
    }

    fn assign(&mut self, cell: usize, v: usize) -> bool {
        if !self.set(cell, v) {
            return false;
        }
        while let Some(c) = self.queue.pop() {
            for i in 0..self.watch[c].len() {
                let k = self.watch[c][i];
                if !self.revise(k) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks constraint `k`, forcing its last unknown cell when possible.
    fn revise(&mut self, k: usize) -> bool {
        let h = self.kernel;
        let Con { a, cells } = self.cons[k];
        let vals = cells.map(|c| self.values[c]);
        let unknown: Vec<usize> = (0..4).filter(|&i| vals[i] == UNSET).collect();
        let [va, vb, vc, vd] = vals;
        let phi = &self.lift[a];
        match unknown.as_slice() {
            [] => h.mul(va, vb) == h.mul(phi[vc], vd),
            [i] => {
                let v = match i {
                    0 => h.mul(h.mul(phi[vc], vd), h.inv(vb)),
                    1 => h.mul(h.inv(va), h.mul(phi[vc], vd)),
                    2 => self.lift_inv[a][h.mul(h.mul(va, vb), h.inv(vd))],
                    _ => h.mul(h.inv(phi[vc]), h.mul(va, vb)),
                };
                self.set(cells[*i], v)
            }
            // a repeated unknown cell is only checked once it is known
            _ => true,
        }
    }

    /// Calls `visit` on every complete table satisfying all constraints,
    /// in lexicographic order of the branching cells.
    pub(crate) fn solve(mut self, mut visit: impl FnMut(&[usize])) {
        let mut order = Vec::new();
        for cell in 0..self.domains.len() {
            match self.domains[cell].len() {
                0 => return,
                1 => {
                    if self.values[cell] == UNSET && !self.assign(cell, self.domains[cell][0]) {
                        return;
                    }
                    if self.values[cell] != self.domains[cell][0] {
                        return;
                    }
                }
                _ => order.push(cell),
            }
        }
        self.search(&order, 0, &mut visit);
    }

    fn search(&mut self, order: &[usize], pos: usize, visit: &mut impl FnMut(&[usize])) {
        let mut i = pos;
        while i < order.len() && self.values[order[i]] != UNSET {
            i += 1;
        }
        if i == order.len() {
            visit(&self.values);
            return;
        }
        let cell = order[i];
        for j in 0..self.domains[cell].len() {
            let v = self.domains[cell][j];
            let mark = self.trail.len();
            if self.assign(cell, v) {
                self.search(order, i + 1, visit);
            }
            self.undo(mark);
        }
    }
}
