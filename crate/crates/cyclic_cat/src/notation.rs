//! Text notation for morphisms, used by fixtures and debugging output.
//!
//! ```text
//! expr       := factor ('*' factor)*
//! factor     := atom ('^' int)? ('@' '[' nat ']' ('_' nat)?)?
//! atom       := 'id' | 'tau' | 'delta_' nat | 'sigma_' nat | 'phi_top' | 'phi_bottom'
//!             | 'psi(' nat ',' nat ')' | 'theta(' nat ',' nat ',' nat ')'
//! ```
//!
//! `g * f` means `g ∘ f`. An annotation `@ [n]_r` fixes the source of its factor;
//! unannotated factors take their source from the target of the factor on their
//! right. `psi(k,n)` with `n > 0` is `ψ_n^{k,n}`, and `psi(k,0)` is `ψ^{k,0}` on
//! the inferred source. Only endomorphisms may carry an exponent.

use crate::{CyclicError, CyclicMorphism, CyclicObject};

#[derive(Debug, Clone)]
enum Atom {
    Id,
    Tau,
    Delta(usize),
    Sigma(usize),
    PhiTop,
    PhiBottom,
    Psi(usize, usize),
    Theta(usize, usize, usize),
}

#[derive(Debug, Clone)]
struct Factor {
    atom: Atom,
    power: i64,
    source: Option<(usize, Option<u32>)>,
    pos: usize,
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, CyclicError> {
        Err(CyclicError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<(), CyclicError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn int(&mut self) -> Result<i64, CyclicError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && (self.s[self.pos] == b'-' || self.s[self.pos] == b'+') {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("expected an integer")
        })
    }

    fn nat(&mut self) -> Result<usize, CyclicError> {
        let at = self.pos;
        let v = self.int()?;
        usize::try_from(v).or_else(|_| {
            self.pos = at;
            self.err("expected a natural number")
        })
    }

    fn factor(&mut self) -> Result<Factor, CyclicError> {
        self.skip_ws();
        let pos = self.pos;
        let name = self.ident();
        let atom = match name.as_str() {
            "id" => Atom::Id,
            "tau" => Atom::Tau,
            "phi_top" => Atom::PhiTop,
            "phi_bottom" => Atom::PhiBottom,
            "delta_" => Atom::Delta(self.nat()?),
            "sigma_" => Atom::Sigma(self.nat()?),
            "psi" => {
                self.expect(b'(')?;
                let k = self.nat()?;
                self.expect(b',')?;
                let n = self.nat()?;
                self.expect(b')')?;
                Atom::Psi(k, n)
            }
            "theta" => {
                self.expect(b'(')?;
                let n = self.nat()?;
                self.expect(b',')?;
                let m = self.nat()?;
                self.expect(b',')?;
                let k = self.nat()?;
                self.expect(b')')?;
                Atom::Theta(n, m, k)
            }
            "" => return self.err("expected a morphism name"),
            other => {
                self.pos = pos;
                return self.err(format!("unknown morphism '{other}'"));
            }
        };
        let mut power = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            power = self.int()?;
        }
        let mut source = None;
        if self.peek() == Some(b'@') {
            self.pos += 1;
            self.expect(b'[')?;
            let n = self.nat()?;
            self.expect(b']')?;
            let mut r = None;
            if self.peek() == Some(b'_') {
                self.pos += 1;
                let at = self.pos;
                let v = self.nat()?;
                r = Some(u32::try_from(v).or_else(|_| {
                    self.pos = at;
                    self.err("r out of range")
                })?);
            }
            source = Some((n, r));
        }
        Ok(Factor { atom, power, source, pos })
    }
}

fn intrinsic_source(atom: &Atom) -> Option<usize> {
    match *atom {
        Atom::Psi(_, n) if n > 0 => Some(n),
        Atom::Theta(n, m, _) => (n + m).checked_sub(1),
        _ => None,
    }
}

fn build(f: &Factor, n: usize, r: u32) -> Result<CyclicMorphism, CyclicError> {
    let base = match f.atom {
        Atom::Id => CyclicMorphism::identity(CyclicObject::new(n, r)?),
        Atom::Tau => CyclicMorphism::tau(n, r)?,
        Atom::Delta(i) => CyclicMorphism::delta(n + 1, i, r)?,
        Atom::Sigma(i) => {
            let t = n.checked_sub(1).ok_or_else(|| CyclicError::Argument("sigma needs a source of size at least 2".into()))?;
            CyclicMorphism::sigma(t, i, r)?
        }
        Atom::PhiTop => CyclicMorphism::phi_top(n, r)?,
        Atom::PhiBottom => CyclicMorphism::phi_bottom(n, r)?,
        Atom::Psi(k, 0) => CyclicMorphism::psi_bottom(n, k, r)?,
        Atom::Psi(k, m) => {
            if m != n {
                return Err(CyclicError::Argument(format!("psi({k},{m}) applied to [{n}]")));
            }
            CyclicMorphism::psi_top(n, k, r)?
        }
        Atom::Theta(a, m, k) => {
            if a + m != n + 1 {
                return Err(CyclicError::Argument(format!("theta({a},{m},{k}) applied to [{n}]")));
            }
            CyclicMorphism::theta(a, m, k, r)?
        }
    };
    if f.power == 1 {
        return Ok(base);
    }
    if base.source() != base.target() {
        return Err(CyclicError::Argument("only endomorphisms can be raised to a power".into()));
    }
    if f.power < 0 && !matches!(f.atom, Atom::Tau | Atom::Id) {
        return Err(CyclicError::Argument("negative powers are only defined for tau".into()));
    }
    match f.atom {
        Atom::Tau => CyclicMorphism::tau_pow(n, f.power, r),
        _ => {
            let mut acc = CyclicMorphism::identity(base.source());
            for _ in 0..f.power.max(0) {
                acc = base.compose(&acc)?;
            }
            Ok(acc)
        }
    }
}

/// Parses an expression; `default_r` is used when no annotation names `r`.
pub fn parse_morphism(text: &str, default_r: Option<u32>) -> Result<CyclicMorphism, CyclicError> {
    let mut lx = Lexer { s: text.as_bytes(), pos: 0 };
    let mut factors = vec![lx.factor()?];
    while lx.peek() == Some(b'*') {
        lx.pos += 1;
        factors.push(lx.factor()?);
    }
    if lx.peek().is_some() {
        return lx.err("unexpected trailing input");
    }
    let mut r = default_r;
    for f in &factors {
        if let Some((_, Some(fr))) = f.source {
            match r {
                Some(existing) if existing != fr && default_r.is_none() => {
                    return Err(CyclicError::Parse { pos: f.pos, msg: "conflicting values of r".into() })
                }
                _ => r = Some(fr),
            }
        }
    }
    let r = r.ok_or(CyclicError::Parse { pos: 0, msg: "r is not specified".into() })?;
    let mut acc: Option<CyclicMorphism> = None;
    for f in factors.iter().rev() {
        let n = match (&f.source, &acc, intrinsic_source(&f.atom)) {
            (Some((n, _)), _, _) => *n,
            (None, Some(prev), _) => prev.target().n,
            (None, None, Some(n)) => n,
            (None, None, None) => {
                return Err(CyclicError::Parse { pos: f.pos, msg: "cannot infer the source object".into() })
            }
        };
        let m = build(f, n, r).map_err(|e| match e {
            CyclicError::Argument(msg) => CyclicError::Parse { pos: f.pos, msg },
            other => other,
        })?;
        acc = Some(match acc {
            None => m,
            Some(prev) => m.compose(&prev)?,
        });
    }
    Ok(acc.expect("at least one factor"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_terms() {
        let t = parse_morphism("tau^2 @ [3]_2", None).unwrap();
        assert_eq!(t, CyclicMorphism::tau_pow(3, 2, 2).unwrap());
        let f = parse_morphism("psi(2,3) * tau^-8 @ [3]_2", None).unwrap();
        assert_eq!(f, CyclicMorphism::psi_top(3, 2, 2).unwrap().pre_tau(-8));
        let g = parse_morphism("phi_top * tau^-2 @ [3]_4", None).unwrap();
        assert_eq!(g, CyclicMorphism::psi_top(3, 1, 4).unwrap());
    }

    #[test]
    fn infers_sources_from_the_right() {
        let f = parse_morphism("sigma_0 * delta_1 @ [1]_3", None).unwrap();
        assert_eq!(f.source().n, 1);
        assert_eq!(f.target().n, 1);
        let th = parse_morphism("psi(1,0) * theta(2,2,1)", Some(3)).unwrap();
        assert_eq!(th.source().n, 3);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_morphism("tau * bogus @ [2]_2", None) {
            Err(CyclicError::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_morphism("tau", None).is_err());
        assert!(parse_morphism("delta_0^2 @ [1]_2", None).is_err());
        assert!(parse_morphism("tau @ [1]_2 junk", None).is_err());
    }

    #[test]
    fn words_round_trip() {
        let samples = [
            CyclicMorphism::psi_top(3, 1, 2).unwrap(),
            CyclicMorphism::theta(2, 3, 1, 3).unwrap(),
            CyclicMorphism::tau_pow(2, 5, 3).unwrap(),
            CyclicMorphism::phi_bottom(4, 2).unwrap().pre_tau(7),
        ];
        for m in samples {
            let w = m.word();
            let back = parse_morphism(&w, Some(m.r())).unwrap();
            assert_eq!(back, m, "word {w}");
        }
    }
}
