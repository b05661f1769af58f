use crate::{CyclicError, CyclicMorphism, CyclicObject};

impl CyclicMorphism {
    /// `φ_n^n : [n] -> [1]`, sending `n` to `1` and everything else to `0`.
    pub fn phi_top(n: usize, r: u32) -> Result<Self, CyclicError> {
        let lift = (0..=n).map(|j| i64::from(j == n)).collect();
        Self::from_lift(CyclicObject::new(n, r)?, CyclicObject::new(1, r)?, lift)
    }

    /// `φ_n^0 : [n] -> [1]`, sending `0` to `0` and everything else to `1`.
    pub fn phi_bottom(n: usize, r: u32) -> Result<Self, CyclicError> {
        let lift = (0..=n).map(|j| i64::from(j != 0)).collect();
        Self::from_lift(CyclicObject::new(n, r)?, CyclicObject::new(1, r)?, lift)
    }

    /// `ψ_n^{k,n} = φ_n^n ∘ τ^{k-n}`; on sets it sends `k` to `1`.
    pub fn psi_top(n: usize, k: usize, r: u32) -> Result<Self, CyclicError> {
        check_position(n, k)?;
        Ok(Self::phi_top(n, r)?.pre_tau(k as i64 - n as i64))
    }

    /// `ψ_n^{k,0} = φ_n^0 ∘ τ^k`; on sets it sends `k` to `0`.
    pub fn psi_bottom(n: usize, k: usize, r: u32) -> Result<Self, CyclicError> {
        check_position(n, k)?;
        Ok(Self::phi_bottom(n, r)?.pre_tau(k as i64))
    }

    /// `θ_n^{n,m,k} : [n+m-1] -> [n]`.
    ///
    /// The merged polygon lists positions `0..k` of the `n`-side, then the `m`
    /// edges of the other side, then the remaining positions. The lift is the
    /// identity before the block, constant `k` on the block and shifted by
    /// `m - 1` after it:
    ///
    /// ```text
    /// F(i) = i          for i < k
    /// F(i) = k          for k <= i < k + m
    /// F(i) = i - m + 1  for i >= k + m
    /// ```
    ///
    /// For `m = 0` this is `δ_k`. This is the only family of lifts that equals the
    /// block collapse on sets and satisfies the four τ-commutation identities; the
    /// derivation is replayed in the tests.
    pub fn theta(n: usize, m: usize, k: usize, r: u32) -> Result<Self, CyclicError> {
        check_position(n, k)?;
        if n + m == 0 {
            return Err(CyclicError::Argument("theta needs n + m >= 1".into()));
        }
        let (k, m) = (k as i64, m as i64);
        let lift = (0..(n as i64 + m))
            .map(|i| {
                if i < k {
                    i
                } else if i < k + m {
                    k
                } else {
                    i - m + 1
                }
            })
            .collect();
        Self::from_lift(CyclicObject::new(n + m as usize - 1, r)?, CyclicObject::new(n, r)?, lift)
    }
}

fn check_position(n: usize, k: usize) -> Result<(), CyclicError> {
    if k > n {
        return Err(CyclicError::Argument(format!("position {k} out of range 0..={n}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_top_on_sets() {
        let f = CyclicMorphism::phi_top(3, 2).unwrap();
        assert_eq!(f.set_map(), vec![0, 0, 0, 1]);
        assert_eq!(CyclicMorphism::phi_bottom(3, 2).unwrap().set_map(), vec![0, 1, 1, 1]);
    }

    #[test]
    fn psi_positions() {
        for n in 0..5 {
            for k in 0..=n {
                let top = CyclicMorphism::psi_top(n, k, 3).unwrap().set_map();
                let bot = CyclicMorphism::psi_bottom(n, k, 3).unwrap().set_map();
                for j in 0..=n {
                    assert_eq!(top[j], usize::from(j == k));
                    assert_eq!(bot[j], usize::from(j != k));
                }
            }
        }
    }

    #[test]
    fn psi_top_at_n_is_phi_top() {
        for n in 0..6 {
            assert_eq!(CyclicMorphism::psi_top(n, n, 4).unwrap(), CyclicMorphism::phi_top(n, 4).unwrap());
        }
    }

    #[test]
    fn theta_with_empty_block_is_a_face() {
        for n in 1..5 {
            for k in 0..=n {
                assert_eq!(CyclicMorphism::theta(n, 0, k, 2).unwrap(), CyclicMorphism::delta(n, k, 2).unwrap());
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(CyclicMorphism::psi_top(2, 3, 2).is_err());
        assert!(CyclicMorphism::theta(2, 1, 3, 2).is_err());
        assert!(CyclicMorphism::theta(0, 0, 0, 2).is_err());
    }
}
