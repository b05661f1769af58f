//! Closed Λ_r-Frobenius families `{C_x}` and their relation checker.

use crate::linear::{GradedSpace, LinearMap};
use crate::matrix::Q;
use crate::report::Report;

/// An exponent `a·x + b·y + c` for an `N`-insertion in a relation, where `x`
/// and `y` are the labels the relation is instantiated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Power {
    pub x: i64,
    pub y: i64,
    pub c: i64,
}

impl Power {
    pub const fn new(x: i64, y: i64, c: i64) -> Self {
        Power { x, y, c }
    }

    pub fn at(self, x: i64, y: i64) -> i64 {
        self.x * x + self.y * y + self.c
    }
}

/// Where the relations insert powers of `N`.
///
/// * center: `C_x` is the image of the projector built with `N^{center(x)}`
/// * commutativity: `μ_{x,y} = μ_{y,x} ∘ (N_y^{p} ⊗ id) ∘ σ`, `p = commutativity(x, y)`
/// * twist: `N_x^{twist(x)} = id`
/// * torus: `T(x,y) = ε_{-1} ∘ μ_{x,-x} ∘ (N_x^{t} ⊗ id) ∘ Δ_{x,-x} ∘ η_1`, `t = torus(x, y)`
/// * SL2Z: `H(x,z) = H(x+z,z)` where `H` is the same composite without `η_1`, `ε_{-1}`
/// * knowledge: `μ ∘ (ι_x ⊗ id) = μ ∘ (N^{q} ⊗ ι_x) ∘ σ`, `q = knowledge(x)`
/// * Cardy: `ι_x ∘ π_x = μ ∘ (N^{m} ⊗ id) ∘ σ ∘ Δ`, `m = cardy(x)`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Conventions {
    /// `P_x` projects onto the `N^{center(x)}`-twisted center.
    pub center: Power,
    pub commutativity: Power,
    pub twist: Power,
    pub torus: Power,
    pub knowledge: Power,
    pub cardy: Power,
}

impl Default for Conventions {
    fn default() -> Self {
        crate::conventions::STANDARD
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedFamily {
    pub r: u32,
    /// `C_x` for `x = 0..r`.
    pub spaces: Vec<GradedSpace>,
    /// `N_x : C_x -> C_x`.
    pub actions: Vec<LinearMap>,
    /// `mu[x][y] : C_x ⊗ C_y -> C_{x+y-1}`.
    pub mu: Vec<Vec<LinearMap>>,
    /// `delta[x][y] : C_{x+y+1} -> C_x ⊗ C_y`.
    pub delta: Vec<Vec<LinearMap>>,
    /// `η_1 : I -> C_1`.
    pub eta: LinearMap,
    /// `ε_{-1} : C_{-1} -> I`.
    pub epsilon: LinearMap,
}

impl ClosedFamily {
    pub fn idx(&self, x: i64) -> usize {
        x.rem_euclid(i64::from(self.r)) as usize
    }

    pub fn space(&self, x: i64) -> &GradedSpace {
        &self.spaces[self.idx(x)]
    }

    pub fn id(&self, x: i64) -> LinearMap {
        LinearMap::identity(self.space(x))
    }

    pub fn n(&self, x: i64) -> &LinearMap {
        &self.actions[self.idx(x)]
    }

    /// `N_x^k` for any integer `k`, using `N_x^r = id` when that holds and an
    /// exact inverse otherwise.
    pub fn n_pow(&self, x: i64, k: i64) -> LinearMap {
        let base = self.n(x);
        if k >= 0 {
            return base.pow(k as u32);
        }
        match base.inverse() {
            Some(inv) => inv.pow(k.unsigned_abs() as u32),
            None => base.pow(k.rem_euclid(i64::from(self.r)) as u32),
        }
    }

    pub fn mu(&self, x: i64, y: i64) -> &LinearMap {
        &self.mu[self.idx(x)][self.idx(y)]
    }

    pub fn delta(&self, x: i64, y: i64) -> &LinearMap {
        &self.delta[self.idx(x)][self.idx(y)]
    }

    /// `μ_{x,-x} ∘ (N_x^k ⊗ id) ∘ Δ_{x,-x} : C_1 -> C_{-1}`.
    pub fn handle(&self, x: i64, k: i64) -> LinearMap {
        self.mu(x, -x).after(&self.n_pow(x, k).tensor(&self.id(-x))).after(self.delta(x, -x))
    }

    /// The torus invariant `T(x, y)`.
    pub fn torus(&self, x: i64, y: i64, conv: &Conventions) -> Q {
        self.epsilon.after(&self.handle(x, conv.torus.at(x, y))).after(&self.eta).scalar()
    }

    /// Pairing `C_x ⊗ C_{-x} -> I` and copairing `I -> C_x ⊗ C_{-x}`.
    pub fn duality_data(&self, x: i64) -> (LinearMap, LinearMap) {
        let ev = self.epsilon.after(self.mu(x, -x));
        let coev = self.delta(x, -x).after(&self.eta);
        (ev, coev)
    }

    /// Whether both snake identities hold for `C_x` and `C_{-x}`.
    pub fn snake_holds(&self, x: i64) -> bool {
        let (ev, _) = self.duality_data(x);
        let (_, coev_neg) = self.duality_data(-x);
        // (ev_x ⊗ id_x) ∘ (id_x ⊗ coev_{-x}) = id_x, with coev_{-x} : I -> C_{-x} ⊗ C_x
        let left = ev.tensor(&self.id(x)).after(&self.id(x).tensor(&coev_neg));
        // (id_{-x} ⊗ ev_x) ∘ (coev_{-x} ⊗ id_{-x}) = id_{-x}
        let right = self.id(-x).tensor(&ev).after(&coev_neg.tensor(&self.id(-x)));
        left == self.id(x) && right == self.id(-x)
    }

    /// Categorical dimension `ev ∘ σ ∘ coev` with `coev : I -> C_{-x} ⊗ C_x`.
    pub fn categorical_dimension(&self, x: i64) -> Q {
        let (ev, _) = self.duality_data(x);
        let (_, coev_neg) = self.duality_data(-x);
        let sigma = LinearMap::braiding(self.space(-x), self.space(x));
        ev.after(&sigma).after(&coev_neg).scalar()
    }

    /// Checks every relation of a closed Λ_r-Frobenius algebra.
    pub fn check(&self, conv: &Conventions) -> Report {
        let mut rep = Report::new("closed family");
        let r = i64::from(self.r);
        let labels: Vec<i64> = (0..r).collect();

        for &x in &labels {
            let nx = self.n(x);
            rep.check_eq("action order", format!("x={x}"), &nx.pow(self.r), &self.id(x));
            rep.check_eq("action parity", format!("x={x}"), &nx.is_even(), &true);
            rep.check_eq("twist", format!("x={x}"), &self.n_pow(x, conv.twist.at(x, 0)), &self.id(x));
        }
        rep.check_eq("unit intertwines", String::new(), &self.n(1).after(&self.eta), &self.eta);
        rep.check_eq("counit intertwines", String::new(), &self.epsilon.after(self.n(-1)), &self.epsilon);

        for &x in &labels {
            for &y in &labels {
                let at = format!("x={x} y={y}");
                let m = self.mu(x, y);
                let d = self.delta(x, y);
                rep.check_eq("product intertwines", at.clone(), &self.n(x + y - 1).after(m), &m.after(&self.n(x).tensor(self.n(y))));
                rep.check_eq("coproduct intertwines", at.clone(), &self.n(x).tensor(self.n(y)).after(d), &d.after(self.n(x + y + 1)));
                let p = conv.commutativity.at(x, y);
                let swapped = self.mu(y, x).after(&self.n_pow(y, p).tensor(&self.id(x))).after(&LinearMap::braiding(self.space(x), self.space(y)));
                rep.check_eq("commutativity", at.clone(), m, &swapped);
                let h = self.handle(x, conv.torus.at(x, y));
                rep.check_eq("SL2Z", at.clone(), &h, &self.handle(x + y, conv.torus.at(x + y, y)));
            }
            let at = format!("x={x}");
            rep.check_eq("left unit", at.clone(), &self.mu(1, x).after(&self.eta.tensor(&self.id(x))), &self.id(x));
            rep.check_eq("right unit", at.clone(), &self.mu(x, 1).after(&self.id(x).tensor(&self.eta)), &self.id(x));
            rep.check_eq("left counit", at.clone(), &self.epsilon.tensor(&self.id(x)).after(self.delta(-1, x)), &self.id(x));
            rep.check_eq("right counit", at, &self.id(x).tensor(&self.epsilon).after(self.delta(x, -1)), &self.id(x));
        }

        for &x in &labels {
            for &y in &labels {
                for &z in &labels {
                    let at = format!("x={x} y={y} z={z}");
                    let lhs = self.mu(x + y - 1, z).after(&self.mu(x, y).tensor(&self.id(z)));
                    let rhs = self.mu(x, y + z - 1).after(&self.id(x).tensor(self.mu(y, z)));
                    rep.check_eq("associativity", at.clone(), &lhs, &rhs);
                    let lhs = self.delta(x, y).tensor(&self.id(z)).after(self.delta(x + y + 1, z));
                    let rhs = self.id(x).tensor(self.delta(y, z)).after(self.delta(x, y + z + 1));
                    rep.check_eq("coassociativity", at.clone(), &lhs, &rhs);
                    // Frobenius: C_x ⊗ C_y -> C_z ⊗ C_w with w = x + y - 2 - z.
                    let w = x + y - 2 - z;
                    let middle = self.delta(z, w).after(self.mu(x, y));
                    let b = y - w - 1;
                    let left = self.mu(x, b).tensor(&self.id(w)).after(&self.id(x).tensor(self.delta(b, w)));
                    let b2 = x - z - 1;
                    let right = self.id(z).tensor(self.mu(b2, y)).after(&self.delta(z, b2).tensor(&self.id(y)));
                    rep.check_eq("Frobenius (left)", at.clone(), &left, &middle);
                    rep.check_eq("Frobenius (right)", at, &right, &middle);
                }
            }
        }
        rep
    }
}
