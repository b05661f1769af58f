//! Line-based text format for marked complexes and bordisms.
//!
//! ```text
//! # comment
//! r 3
//! vertex u w                      optional; edges may introduce vertices
//! edge a u u                      name, tail, head
//! edge b w w
//! edge c u w
//! face f -a +c +b -c              counterclockwise boundary word
//! puncture p
//! boundary closed in 1 -a         kind, direction, label, core sides
//! boundary closed out 1 +b
//! boundary open in -i             open components have no label
//! boundary free +x +y             optional; inferred when absent
//! flip c                          orientation against tail -> head
//! mark f 0                        marked side of a face (default 0)
//! index c 1                       edge index (default 0)
//! source 0                        incoming components, in order
//! target 1                        outgoing components, in order
//! ```
//!
//! Marking lines need `r`. Without marking lines the marking is the standard
//! one: zero indices, marks at position 0, and parametrized boundary edges
//! oriented by the in/out convention. Unknown keywords are rejected.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::complex::{BoundaryComponent, BoundaryKind, Direction, Edge, Face, PlcwComplex, Side};
use crate::glue::{rebuild_free_boundary, Bordism};
use crate::marking::Marking;
use crate::PlcwError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceFile {
    pub r: Option<u32>,
    pub complex: PlcwComplex,
    pub marking: Option<Marking>,
    pub source: Option<Vec<usize>>,
    pub target: Option<Vec<usize>>,
}

impl SurfaceFile {
    /// The marked complex as a bordism; without `source`/`target` lines all
    /// incoming and outgoing components are used in stored order.
    pub fn to_bordism(&self) -> Result<Bordism, PlcwError> {
        let m = self.marking.clone().ok_or_else(|| PlcwError::Parse { line: 0, msg: "the file sets no r".into() })?;
        match (&self.source, &self.target) {
            (None, None) => Bordism::new(self.complex.clone(), m),
            _ => {
                let b = Bordism {
                    complex: self.complex.clone(),
                    marking: m,
                    source: self.source.clone().unwrap_or_default(),
                    target: self.target.clone().unwrap_or_default(),
                };
                b.validate()?;
                Ok(b)
            }
        }
    }
}

enum MarkLine {
    Flip(usize),
    Mark(usize, usize),
    Index(usize, i64),
}

pub fn parse_surface(text: &str) -> Result<SurfaceFile, PlcwError> {
    let mut k = PlcwComplex::default();
    let mut r: Option<u32> = None;
    let mut marks: Vec<(usize, MarkLine)> = Vec::new();
    let mut source = None;
    let mut target = None;
    let mut free_given = false;
    let mut pending_boundary: Vec<(usize, BoundaryKind, Direction, Option<i64>, Vec<String>)> = Vec::new();
    let mut punctures: Vec<(usize, String)> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let perr = |msg: String| PlcwError::Parse { line, msg };
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&key, args)) = toks.split_first() else { continue };
        let int = |s: &str| s.parse::<i64>().map_err(|_| perr(format!("'{s}' is not an integer")));
        let nat = |s: &str| s.parse::<usize>().map_err(|_| perr(format!("'{s}' is not a natural number")));
        let need = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(perr(format!("'{key}' takes {n} arguments, got {}", args.len())))
            }
        };
        match key {
            "r" => {
                need(1)?;
                let v = nat(args[0])?;
                if v == 0 || v > u32::MAX as usize || r.is_some() {
                    return Err(perr("r must be given once and be positive".into()));
                }
                r = Some(v as u32);
            }
            "vertex" => {
                for v in args {
                    if k.vertex_index(v).is_some() {
                        return Err(perr(format!("vertex {v} declared twice")));
                    }
                    k.vertices.push(v.to_string());
                }
            }
            "edge" => {
                need(3)?;
                if k.edge_index(args[0]).is_some() {
                    return Err(perr(format!("edge {} declared twice", args[0])));
                }
                let mut vid = |name: &str| match k.vertex_index(name) {
                    Some(v) => v,
                    None => {
                        k.vertices.push(name.to_string());
                        k.vertices.len() - 1
                    }
                };
                let tail = vid(args[1]);
                let head = vid(args[2]);
                k.edges.push(Edge { name: args[0].to_string(), tail, head });
            }
            "face" => {
                if args.len() < 2 {
                    return Err(perr("a face needs a name and at least one side".into()));
                }
                let word = args[1..].iter().map(|t| parse_side(&k, t).map_err(perr)).collect::<Result<_, _>>()?;
                k.faces.push(Face { name: args[0].to_string(), word });
            }
            "puncture" => {
                for v in args {
                    punctures.push((line, v.to_string()));
                }
            }
            "boundary" => {
                let (kind, rest) = match args.first() {
                    Some(&"closed") => (BoundaryKind::Closed, &args[1..]),
                    Some(&"open") => (BoundaryKind::Open, &args[1..]),
                    Some(&"free") => (BoundaryKind::Free, &args[1..]),
                    _ => return Err(perr("boundary kind must be closed, open or free".into())),
                };
                let (direction, rest) = if kind == BoundaryKind::Free {
                    (Direction::None, rest)
                } else {
                    match rest.first() {
                        Some(&"in") => (Direction::In, &rest[1..]),
                        Some(&"out") => (Direction::Out, &rest[1..]),
                        _ => return Err(perr("direction must be in or out".into())),
                    }
                };
                let (label, rest) = if kind == BoundaryKind::Closed {
                    let l = rest.first().ok_or_else(|| perr("closed components need a label".into()))?;
                    (Some(int(l)?), &rest[1..])
                } else {
                    (None, rest)
                };
                if rest.is_empty() {
                    return Err(perr("a boundary component needs core sides".into()));
                }
                free_given |= kind == BoundaryKind::Free;
                pending_boundary.push((line, kind, direction, label, rest.iter().map(|s| s.to_string()).collect()));
            }
            "flip" => {
                for e in args {
                    let e = k.edge_index(e).ok_or_else(|| perr(format!("unknown edge {e}")))?;
                    marks.push((line, MarkLine::Flip(e)));
                }
            }
            "mark" => {
                need(2)?;
                let f = k.face_index(args[0]).ok_or_else(|| perr(format!("unknown face {}", args[0])))?;
                marks.push((line, MarkLine::Mark(f, nat(args[1])?)));
            }
            "index" => {
                need(2)?;
                let e = k.edge_index(args[0]).ok_or_else(|| perr(format!("unknown edge {}", args[0])))?;
                marks.push((line, MarkLine::Index(e, int(args[1])?)));
            }
            "source" | "target" => {
                let list = args.iter().map(|s| nat(s)).collect::<Result<Vec<_>, _>>()?;
                let slot = if key == "source" { &mut source } else { &mut target };
                if slot.replace(list).is_some() {
                    return Err(perr(format!("'{key}' given twice")));
                }
            }
            other => return Err(perr(format!("unknown keyword '{other}'"))),
        }
    }
    for (line, name) in punctures {
        let v = k.vertex_index(&name).ok_or(PlcwError::Parse { line, msg: format!("unknown vertex {name}") })?;
        k.punctures.insert(v);
    }
    for (line, kind, direction, label, sides) in pending_boundary {
        let core = sides
            .iter()
            .map(|t| parse_side(&k, t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|msg| PlcwError::Parse { line, msg })?;
        k.boundary.push(BoundaryComponent { kind, direction, label, core });
    }
    if !free_given {
        rebuild_free_boundary(&mut k);
    }
    k.validate()?;
    let marking = match r {
        None => {
            if let Some((line, _)) = marks.first() {
                return Err(PlcwError::Parse { line: *line, msg: "marking data needs r".into() });
            }
            None
        }
        Some(r) => {
            let mut m = Marking::standard(&k, r);
            let mut flipped = BTreeSet::new();
            for (line, ml) in &marks {
                let perr = |msg: String| PlcwError::Parse { line: *line, msg };
                match *ml {
                    MarkLine::Flip(e) => {
                        if !flipped.insert(e) {
                            return Err(perr(format!("edge {} flipped twice", k.edges[e].name)));
                        }
                        let forced = k.boundary.iter().any(|c| c.is_parametrized() && c.core.iter().any(|s| s.edge == e));
                        if forced && !m.flip[e] {
                            return Err(perr(format!(
                                "edge {} is oriented by the boundary convention",
                                k.edges[e].name
                            )));
                        }
                        m.flip[e] = true;
                    }
                    MarkLine::Mark(f, p) => m.mark[f] = p,
                    MarkLine::Index(e, s) => m.index[e] = s.rem_euclid(i64::from(r)),
                }
            }
            m.validate(&k)?;
            Some(m)
        }
    };
    Ok(SurfaceFile { r, complex: k, marking, source, target })
}

fn parse_side(k: &PlcwComplex, tok: &str) -> Result<Side, String> {
    let (forward, name) = match tok.as_bytes().first() {
        Some(b'+') => (true, &tok[1..]),
        Some(b'-') => (false, &tok[1..]),
        _ => return Err(format!("side '{tok}' needs a + or - sign")),
    };
    let e = k.edge_index(name).ok_or_else(|| format!("unknown edge {name}"))?;
    Ok(Side::new(e, forward))
}

/// Serializes a complex, an optional marking and optional source/target
/// lists in the format read by [`parse_surface`].
pub fn write_surface(k: &PlcwComplex, m: Option<&Marking>, ends: Option<(&[usize], &[usize])>) -> String {
    let mut s = String::new();
    if let Some(m) = m {
        writeln!(s, "r {}", m.r).unwrap();
    }
    writeln!(s, "vertex {}", k.vertices.join(" ")).unwrap();
    for e in &k.edges {
        writeln!(s, "edge {} {} {}", e.name, k.vertices[e.tail], k.vertices[e.head]).unwrap();
    }
    let sides = |core: &[Side]| core.iter().map(|x| k.side_name(*x)).collect::<Vec<_>>().join(" ");
    for f in &k.faces {
        writeln!(s, "face {} {}", f.name, sides(&f.word)).unwrap();
    }
    for &p in &k.punctures {
        writeln!(s, "puncture {}", k.vertices[p]).unwrap();
    }
    for c in &k.boundary {
        let dir = match c.direction {
            Direction::In => "in ",
            Direction::Out => "out ",
            Direction::None => "",
        };
        let (kind, label) = match c.kind {
            BoundaryKind::Closed => ("closed", format!("{} ", c.label.unwrap_or(0))),
            BoundaryKind::Open => ("open", String::new()),
            BoundaryKind::Free => ("free", String::new()),
        };
        writeln!(s, "boundary {kind} {dir}{label}{}", sides(&c.core)).unwrap();
    }
    if let Some(m) = m {
        let flips: Vec<&str> =
            (0..k.edges.len()).filter(|&e| m.flip[e]).map(|e| k.edges[e].name.as_str()).collect();
        if !flips.is_empty() {
            writeln!(s, "flip {}", flips.join(" ")).unwrap();
        }
        for (f, face) in k.faces.iter().enumerate() {
            if m.mark[f] != 0 {
                writeln!(s, "mark {} {}", face.name, m.mark[f]).unwrap();
            }
        }
        for (e, edge) in k.edges.iter().enumerate() {
            if m.index[e] != 0 {
                writeln!(s, "index {} {}", edge.name, m.index[e]).unwrap();
            }
        }
    }
    if let Some((src, tgt)) = ends {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        writeln!(s, "source {}", join(src)).unwrap();
        writeln!(s, "target {}", join(tgt)).unwrap();
    }
    s
}

pub fn write_bordism(b: &Bordism) -> String {
    write_surface(&b.complex, Some(&b.marking), Some((&b.source, &b.target)))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CYLINDER: &str = "\
r 3
edge a u u
edge b w w
edge c u w
face f -a +c +b -c
boundary closed in 1 -a
boundary closed out 1 +b
index c 1
";

    #[test]
    fn parses_a_cylinder() {
        let sf = parse_surface(CYLINDER).unwrap();
        assert_eq!(sf.r, Some(3));
        let b = sf.to_bordism().unwrap();
        assert_eq!((b.source.clone(), b.target.clone()), (vec![0], vec![1]));
        assert_eq!(b.source_labels(), vec![Some(1)]);
    }

    #[test]
    fn round_trips() {
        let sf = parse_surface(CYLINDER).unwrap();
        let b = sf.to_bordism().unwrap();
        let text = write_bordism(&b);
        let back = parse_surface(&text).unwrap().to_bordism().unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_lines() {
        let err = parse_surface("r 2\ncolour red\n").unwrap_err();
        assert_eq!(err, PlcwError::Parse { line: 2, msg: "unknown keyword 'colour'".into() });
        assert!(matches!(parse_surface("edge a u\n"), Err(PlcwError::Parse { line: 1, .. })));
        assert!(matches!(parse_surface("edge a u u\nface f +b\n"), Err(PlcwError::Parse { line: 2, .. })));
        assert!(matches!(parse_surface("edge a u w\nface f +a -a\nindex a 1\n"), Err(PlcwError::Parse { .. })));
    }

    #[test]
    fn free_boundary_is_inferred() {
        let sf = parse_surface("edge a u w\nedge b w u\nface f +a +b\n").unwrap();
        assert_eq!(sf.complex.boundary.len(), 1);
        assert_eq!(sf.complex.boundary[0].core.len(), 2);
    }

    #[test]
    fn inadmissible_files_are_rejected_as_bordisms() {
        let text = CYLINDER.replace("index c 1", "index c 0");
        let sf = parse_surface(&text).unwrap();
        assert!(matches!(sf.to_bordism(), Err(PlcwError::Inadmissible(_))));
    }
}
