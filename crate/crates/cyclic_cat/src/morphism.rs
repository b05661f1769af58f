use std::fmt;

use crate::CyclicError;

/// The object `[n]_r`: a cyclically ordered set with `n + 1` elements, seen on
/// the `r`-fold cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicObject {
    pub n: usize,
    pub r: u32,
}

impl CyclicObject {
    pub fn new(n: usize, r: u32) -> Result<Self, CyclicError> {
        if r == 0 {
            return Err(CyclicError::Argument("r must be at least 1".into()));
        }
        Ok(CyclicObject { n, r })
    }

    /// Number of elements of the underlying set.
    pub fn size(self) -> i64 {
        self.n as i64 + 1
    }

    /// Order of `τ_n`, namely `r(n+1)`.
    pub fn tau_order(self) -> i64 {
        self.r as i64 * self.size()
    }
}

impl fmt::Display for CyclicObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]_{}", self.n, self.r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicMorphism {
    source: CyclicObject,
    target: CyclicObject,
    lift: Vec<i64>,
}

impl CyclicMorphism {
    /// Builds a morphism from an arbitrary valid lift and normalizes it.
    pub fn from_lift(
        source: CyclicObject,
        target: CyclicObject,
        lift: Vec<i64>,
    ) -> Result<Self, CyclicError> {
        if source.r != target.r {
            return Err(CyclicError::Argument(format!(
                "source {source} and target {target} live in different categories"
            )));
        }
        if lift.len() != source.n + 1 {
            return Err(CyclicError::InvalidLift(format!(
                "expected {} values, got {}",
                source.n + 1,
                lift.len()
            )));
        }
        if lift.windows(2).any(|w| w[0] > w[1]) {
            return Err(CyclicError::InvalidLift(format!("{lift:?} is not monotone")));
        }
        if lift[source.n] > lift[0] + target.size() {
            return Err(CyclicError::InvalidLift(format!(
                "{lift:?} wraps more than once around {target}"
            )));
        }
        Ok(Self::normalized(source, target, lift))
    }

    fn normalized(source: CyclicObject, target: CyclicObject, mut lift: Vec<i64>) -> Self {
        let window = target.tau_order();
        let shift = lift[0].div_euclid(window) * window;
        if shift != 0 {
            for v in &mut lift {
                *v -= shift;
            }
        }
        CyclicMorphism { source, target, lift }
    }

    pub fn identity(obj: CyclicObject) -> Self {
        CyclicMorphism { source: obj, target: obj, lift: (0..obj.size()).collect() }
    }

    pub fn source(&self) -> CyclicObject {
        self.source
    }

    pub fn target(&self) -> CyclicObject {
        self.target
    }

    pub fn r(&self) -> u32 {
        self.source.r
    }

    pub fn lift(&self) -> &[i64] {
        &self.lift
    }

    /// Value of the periodic extension of the lift at an arbitrary integer.
    pub fn eval(&self, i: i64) -> i64 {
        let p = self.source.size();
        let q = i.div_euclid(p);
        self.lift[i.rem_euclid(p) as usize] + q * self.target.size()
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &CyclicMorphism) -> Result<CyclicMorphism, CyclicError> {
        if f.target != self.source {
            return Err(CyclicError::Mismatch {
                target: f.target.to_string(),
                expected: self.source.to_string(),
            });
        }
        let lift = f.lift.iter().map(|&v| self.eval(v)).collect();
        Ok(Self::normalized(f.source, self.target, lift))
    }

    /// Image of `0..=n` in `0..=m` under the forgetful functor to sets.
    pub fn set_map(&self) -> Vec<usize> {
        let m1 = self.target.size();
        self.lift.iter().map(|v| v.rem_euclid(m1) as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.lift.iter().enumerate().all(|(i, &v)| v == i as i64)
    }

    /// Factorization `τ_m^a ∘ H ∘ τ_n^b` with `H` a map of the simplex category,
    /// written with `delta_i` and `sigma_j` factors.
    pub fn word(&self) -> String {
        let p = self.source.size();
        let m1 = self.target.size();
        let m = self.target.n as i64;
        for t in 0..p {
            let h: Vec<i64> = (0..p).map(|j| self.eval(j + t)).collect();
            let base = h[0].div_euclid(m1) * m1;
            let h0: Vec<i64> = h.iter().map(|v| v - base).collect();
            if h0[p as usize - 1] > m {
                continue;
            }
            let mut factors = Vec::new();
            // F = τ^{-base} ∘ H0 ∘ τ^{t}, since τ^k is the shift by -k.
            if base != 0 {
                factors.push(format!("tau^{}", -base));
            }
            let missing: Vec<i64> = (0..=m).filter(|v| !h0.contains(v)).collect();
            for &i in missing.iter().rev() {
                factors.push(format!("delta_{i}"));
            }
            for j in 0..(p - 1) as usize {
                if h0[j] == h0[j + 1] {
                    factors.push(format!("sigma_{j}"));
                }
            }
            if t != 0 {
                factors.push(format!("tau^{t}"));
            }
            let src = self.source;
            return if factors.is_empty() {
                format!("id @ {src}")
            } else {
                format!("{} @ {src}", factors.join(" * "))
            };
        }
        format!("lift{:?} : {} -> {}", self.lift, self.source, self.target)
    }

    pub fn delta(n: usize, i: usize, r: u32) -> Result<Self, CyclicError> {
        if n == 0 || i > n {
            return Err(CyclicError::Argument(format!("delta_{i} needs 0 <= i <= n and n >= 1, got n = {n}")));
        }
        let lift = (0..n as i64).map(|j| if j < i as i64 { j } else { j + 1 }).collect();
        Ok(Self::normalized(CyclicObject::new(n - 1, r)?, CyclicObject::new(n, r)?, lift))
    }

    pub fn sigma(n: usize, i: usize, r: u32) -> Result<Self, CyclicError> {
        if i > n {
            return Err(CyclicError::Argument(format!("sigma_{i} needs 0 <= i <= n = {n}")));
        }
        let lift = (0..=(n as i64 + 1)).map(|j| if j <= i as i64 { j } else { j - 1 }).collect();
        Ok(Self::normalized(CyclicObject::new(n + 1, r)?, CyclicObject::new(n, r)?, lift))
    }

    /// `τ_n^k` for any integer `k`.
    pub fn tau_pow(n: usize, k: i64, r: u32) -> Result<Self, CyclicError> {
        let obj = CyclicObject::new(n, r)?;
        let lift = (0..obj.size()).map(|j| j - k).collect();
        Ok(Self::normalized(obj, obj, lift))
    }

    pub fn tau(n: usize, r: u32) -> Result<Self, CyclicError> {
        Self::tau_pow(n, 1, r)
    }

    pub fn tau_inverse(n: usize, r: u32) -> Result<Self, CyclicError> {
        Self::tau_pow(n, -1, r)
    }

    /// `self ∘ τ^k` on the source.
    pub fn pre_tau(&self, k: i64) -> CyclicMorphism {
        let lift = (0..self.source.size()).map(|j| self.eval(j - k)).collect();
        Self::normalized(self.source, self.target, lift)
    }

    /// `τ^k ∘ self` on the target.
    pub fn post_tau(&self, k: i64) -> CyclicMorphism {
        let lift = self.lift.iter().map(|v| v - k).collect();
        Self::normalized(self.source, self.target, lift)
    }

    /// Smallest `t` in `0..r(n+1)` with `τ^t ∘ self = other`, where both are
    /// parallel arrows; `None` if no power of τ relates them.
    pub fn tau_offset_to(&self, other: &CyclicMorphism) -> Option<i64> {
        if self.source != other.source || self.target != other.target {
            return None;
        }
        let window = self.target.tau_order();
        let d = self.lift[0] - other.lift[0];
        let t = d.rem_euclid(window);
        (self.post_tau(t) == *other).then_some(t)
    }
}

impl fmt::Display for CyclicMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}: {} -> {}", self.lift, self.source, self.target)
    }
}
