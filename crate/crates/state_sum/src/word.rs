//! Generator words: layers of generators placed side by side, composed from
//! left to right.
//!
//! Text form: layers are separated by `;`, generators within a layer by `|`,
//! e.g. `cup | cylinder(0) ; pants(1, 0)`.

use std::fmt;

use plcw_core::{Bordism, BoundaryLabel};

use crate::generators::Generator;
use crate::StateSumError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub layers: Vec<Vec<Generator>>,
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let layers: Vec<String> =
            self.layers.iter().map(|l| l.iter().map(ToString::to_string).collect::<Vec<_>>().join(" | ")).collect();
        write!(f, "{}", layers.join(" ; "))
    }
}

impl Generator {
    /// Parses the form produced by `Display`.
    pub fn parse(text: &str) -> Result<Generator, StateSumError> {
        let bad = || StateSumError::Malformed(format!("unknown generator {text:?}"));
        let t = text.trim();
        let (name, args) = match t.find('(') {
            Some(i) => {
                let inner = t[i + 1..].strip_suffix(')').ok_or_else(bad)?;
                let args = inner.split(',').map(|a| a.trim().parse::<i64>().map_err(|_| bad())).collect::<Result<Vec<_>, _>>()?;
                (t[..i].trim(), args)
            }
            None => (t, Vec::new()),
        };
        let g = match (name, args.as_slice()) {
            ("cylinder", [x]) => Generator::Cylinder(*x),
            ("twist", [x]) => Generator::Twist(*x),
            ("pants", [x, y]) => Generator::Pants(*x, *y),
            ("copants", [x, y]) => Generator::Copants(*x, *y),
            ("cup", []) => Generator::Cup,
            ("cap", []) => Generator::Cap,
            ("open_cylinder", []) => Generator::OpenCylinder,
            ("open_twist", []) => Generator::OpenTwist,
            ("open_pants", []) => Generator::OpenPants,
            ("open_copants", []) => Generator::OpenCopants,
            ("open_cup", []) => Generator::OpenCup,
            ("open_cap", []) => Generator::OpenCap,
            ("cozip", [x]) => Generator::Cozip(*x),
            ("zip", [x]) => Generator::Zip(*x),
            _ => return Err(bad()),
        };
        Ok(g)
    }
}

impl Word {
    pub fn parse(text: &str) -> Result<Word, StateSumError> {
        let layers = text
            .split(';')
            .map(|layer| layer.split('|').map(Generator::parse).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if layers.is_empty() {
            return Err(StateSumError::Malformed("empty word".into()));
        }
        Ok(Word { layers })
    }

    fn layer_bordism(layer: &[Generator], r: u32) -> Result<Bordism, StateSumError> {
        let mut it = layer.iter();
        let first = it.next().ok_or_else(|| StateSumError::Malformed("empty layer".into()))?;
        let mut acc = first.bordism(r)?;
        for g in it {
            acc = acc.tensor(&g.bordism(r)?)?;
        }
        Ok(acc)
    }

    /// The glued bordism of layers `range`.
    pub fn bordism_of(&self, range: std::ops::Range<usize>, r: u32) -> Result<Bordism, StateSumError> {
        let mut acc: Option<Bordism> = None;
        for layer in &self.layers[range] {
            let b = Self::layer_bordism(layer, r)?;
            acc = Some(match acc {
                None => b,
                Some(a) => a.then(&b)?,
            });
        }
        acc.ok_or_else(|| StateSumError::Malformed("empty range of layers".into()))
    }

    pub fn bordism(&self, r: u32) -> Result<Bordism, StateSumError> {
        self.bordism_of(0..self.layers.len(), r)
    }

    /// A word of `len` layers starting from `start`. Each layer applies one
    /// generator to a stretch of the current boundary and identities
    /// elsewhere; `choose(n)` must return a number below `n`.
    pub fn random(r: u32, start: &[BoundaryLabel], len: usize, choose: &mut dyn FnMut(usize) -> usize) -> Word {
        let ri = i64::from(r);
        let mut cur: Vec<BoundaryLabel> = start.to_vec();
        let mut layers = Vec::with_capacity(len);
        for _ in 0..len {
            // (position, generator) pairs whose source matches `cur` there.
            let mut options: Vec<(usize, Generator)> = Vec::new();
            for pos in 0..=cur.len() {
                for g in Generator::all(r) {
                    if matches!(g, Generator::Cylinder(_) | Generator::OpenCylinder) {
                        continue;
                    }
                    let (src, _) = g.boundary(r);
                    if cur.len() >= pos + src.len() && cur[pos..pos + src.len()] == src[..] {
                        options.push((pos, g));
                    }
                }
            }
            let (pos, g) = options[choose(options.len())];
            let (src, tgt) = g.boundary(r);
            let mut layer = Vec::new();
            for l in &cur[..pos] {
                layer.push(identity_generator(*l, ri));
            }
            layer.push(g);
            for l in &cur[pos + src.len()..] {
                layer.push(identity_generator(*l, ri));
            }
            let mut next = cur[..pos].to_vec();
            next.extend(tgt);
            next.extend_from_slice(&cur[pos + src.len()..]);
            cur = next;
            layers.push(layer);
        }
        Word { layers }
    }
}

fn identity_generator(l: BoundaryLabel, r: i64) -> Generator {
    match l {
        Some(x) => Generator::Cylinder(x.rem_euclid(r)),
        None => Generator::OpenCylinder,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let w = Word::parse("cup | cylinder(0) ; pants(1, 0) ; cozip(0) ; open_twist").unwrap();
        assert_eq!(w.layers.len(), 4);
        assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        assert!(Word::parse("pants(1)").is_err());
        assert!(Word::parse("handle").is_err());
    }

    #[test]
    fn words_glue_along_matching_labels() {
        let w = Word::parse("cup | cylinder(1) ; pants(1, 1) ; cap").unwrap().bordism(2).unwrap();
        assert_eq!(w.source_labels(), vec![Some(1)]);
        assert!(w.target_labels().is_empty());
    }

    #[test]
    fn random_words_compose() {
        let mut state = 7usize;
        let mut choose = |n: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 33) % n
        };
        for _ in 0..20 {
            let w = Word::random(2, &[Some(1)], 4, &mut choose);
            let b = w.bordism(2).unwrap();
            assert_eq!(b.source_labels(), vec![Some(1)]);
        }
    }

}
