//! Relations among the generator bordisms, checked by evaluating both sides.

use frob_algebra::{Conventions, LinearMap, Report};
use plcw_core::{Bordism, BoundaryLabel};
use rayon::prelude::*;

use crate::evaluate::{evaluate, StateSumData};
use crate::generators::{swap, torus, Generator};
use crate::StateSumError;

/// The right-hand side of a relation instance.
enum Rhs {
    Bordism(Bordism),
    Map(LinearMap),
}

struct Instance {
    relation: &'static str,
    at: String,
    lhs: Bordism,
    rhs: Rhs,
}

type Builder<'a> = dyn Fn(Generator) -> Result<Bordism, StateSumError> + Sync + 'a;

struct Words<'a> {
    r: u32,
    build: &'a Builder<'a>,
}

impl Words<'_> {
    fn g(&self, g: Generator) -> Result<Bordism, StateSumError> {
        (self.build)(g)
    }

    fn chain(&self, steps: Vec<Bordism>) -> Result<Bordism, StateSumError> {
        let mut it = steps.into_iter();
        let mut acc = it.next().expect("at least one step");
        for b in it {
            acc = acc.then(&b)?;
        }
        Ok(acc)
    }

    fn tensor(&self, a: Bordism, b: Bordism) -> Result<Bordism, StateSumError> {
        Ok(a.tensor(&b)?)
    }

    fn cyl(&self, x: i64) -> Result<Bordism, StateSumError> {
        self.g(Generator::Cylinder(x))
    }

    fn ocyl(&self) -> Result<Bordism, StateSumError> {
        self.g(Generator::OpenCylinder)
    }

    /// `k` Dehn twists, `k` taken mod `r`; zero twists is the cylinder.
    fn twists(&self, x: i64, k: i64) -> Result<Bordism, StateSumError> {
        let k = k.rem_euclid(i64::from(self.r));
        if k == 0 {
            return self.cyl(x);
        }
        self.chain((0..k).map(|_| self.g(Generator::Twist(x))).collect::<Result<_, _>>()?)
    }

    fn open_twists(&self, k: i64) -> Result<Bordism, StateSumError> {
        let k = k.rem_euclid(i64::from(self.r));
        if k == 0 {
            return self.ocyl();
        }
        self.chain((0..k).map(|_| self.g(Generator::OpenTwist)).collect::<Result<_, _>>()?)
    }

    fn swap(&self, a: &[BoundaryLabel], b: &[BoundaryLabel]) -> Result<Bordism, StateSumError> {
        swap(self.r, a, b)
    }

    fn label(&self, x: i64) -> BoundaryLabel {
        Some(x.rem_euclid(i64::from(self.r)))
    }

    /// `C_1 -> C_{-1}` through `C_x ⊗ C_{-x}` with `k` twists on the first leg.
    fn handle(&self, x: i64, k: i64) -> Result<Bordism, StateSumError> {
        self.chain(vec![
            self.g(Generator::Copants(x, -x))?,
            self.tensor(self.twists(x, k)?, self.cyl(-x)?)?,
            self.g(Generator::Pants(x, -x))?,
        ])
    }
}

/// The structure map a generator should evaluate to.
pub fn expected_map(data: &StateSumData, g: Generator) -> LinearMap {
    let a = &data.algebra;
    let fam = &data.center.family;
    let idx = |x: i64| fam.idx(x);
    match g {
        Generator::Cylinder(x) => fam.id(x),
        Generator::Twist(x) => fam.n(x).clone(),
        Generator::Pants(x, y) => fam.mu(x, y).clone(),
        Generator::Copants(x, y) => fam.delta(x, y).clone(),
        Generator::Cup => fam.eta.clone(),
        Generator::Cap => fam.epsilon.clone(),
        Generator::OpenCylinder => LinearMap::identity(&a.space),
        Generator::OpenTwist => a.nakayama().expect("nondegenerate pairing"),
        Generator::OpenPants => a.mu.clone(),
        Generator::OpenCopants => a.delta.clone(),
        Generator::OpenCup => a.eta.clone(),
        Generator::OpenCap => a.epsilon.clone(),
        Generator::Cozip(x) => data.center.iota[idx(x)].clone(),
        Generator::Zip(x) => data.center.pi[idx(x)].clone(),
    }
}

/// Checks every generator against the structure maps of `(A, Z^r(A))` and
/// every defining relation of a knowledgeable Λ_r-Frobenius algebra on
/// glued generator bordisms, for all labels in `Z/r`.
pub fn verify_generator_relations(data: &StateSumData, max_entries: usize) -> Result<Report, StateSumError> {
    let r = data.r();
    verify_with(data, max_entries, &|g: Generator| g.bordism(r))
}

/// As [`verify_generator_relations`], with the generator bordisms supplied
/// by `build`.
pub fn verify_with(data: &StateSumData, max_entries: usize, build: &Builder<'_>) -> Result<Report, StateSumError> {
    let r = data.r();
    let w = Words { r, build };
    let conv = Conventions::default();
    let fam = &data.center.family;
    let ri = i64::from(r);
    let mut inst: Vec<Instance> = Vec::new();
    let mut add = |relation: &'static str, at: String, lhs: Bordism, rhs: Rhs| inst.push(Instance { relation, at, lhs, rhs });

    for g in Generator::all(r) {
        add("generator = structure map", g.to_string(), w.g(g)?, Rhs::Map(expected_map(data, g)));
    }

    let open = [None];
    for x in 0..ri {
        let at = format!("x={x}");
        let l = [w.label(x)];
        add("left unit", at.clone(), w.chain(vec![w.tensor(w.g(Generator::Cup)?, w.cyl(x)?)?, w.g(Generator::Pants(1, x))?])?, Rhs::Bordism(w.cyl(x)?));
        add("right unit", at.clone(), w.chain(vec![w.tensor(w.cyl(x)?, w.g(Generator::Cup)?)?, w.g(Generator::Pants(x, 1))?])?, Rhs::Bordism(w.cyl(x)?));
        add("left counit", at.clone(), w.chain(vec![w.g(Generator::Copants(-1, x))?, w.tensor(w.g(Generator::Cap)?, w.cyl(x)?)?])?, Rhs::Bordism(w.cyl(x)?));
        add("right counit", at.clone(), w.chain(vec![w.g(Generator::Copants(x, -1))?, w.tensor(w.cyl(x)?, w.g(Generator::Cap)?)?])?, Rhs::Bordism(w.cyl(x)?));
        add("twist", at.clone(), w.twists(x, conv.twist.at(x, 0))?, Rhs::Bordism(w.cyl(x)?));
        add("twist order", at.clone(), w.chain((0..ri).map(|_| w.g(Generator::Twist(x))).collect::<Result<_, _>>()?)?, Rhs::Bordism(w.cyl(x)?));
        let coev = w.chain(vec![w.g(Generator::Cup)?, w.g(Generator::Copants(-x, x))?])?;
        let ev = w.chain(vec![w.g(Generator::Pants(x, -x))?, w.g(Generator::Cap)?])?;
        add("duality", at.clone(), w.chain(vec![w.tensor(w.cyl(x)?, coev)?, w.tensor(ev, w.cyl(x)?)?])?, Rhs::Bordism(w.cyl(x)?));

        add(
            "knowledge",
            at.clone(),
            w.chain(vec![w.tensor(w.g(Generator::Cozip(x))?, w.ocyl()?)?, w.g(Generator::OpenPants)?])?,
            Rhs::Bordism(w.chain(vec![
                w.swap(&l, &open)?,
                w.tensor(w.open_twists(conv.knowledge.at(x, 0))?, w.g(Generator::Cozip(x))?)?,
                w.g(Generator::OpenPants)?,
            ])?),
        );
        add(
            "knowledgeable duality",
            at.clone(),
            w.chain(vec![w.tensor(w.g(Generator::Zip(x))?, w.cyl(-x)?)?, w.g(Generator::Pants(x, -x))?, w.g(Generator::Cap)?])?,
            Rhs::Bordism(w.chain(vec![
                w.tensor(w.ocyl()?, w.g(Generator::Cozip(-x))?)?,
                w.g(Generator::OpenPants)?,
                w.g(Generator::OpenCap)?,
            ])?),
        );
        add(
            "Cardy",
            at.clone(),
            w.chain(vec![w.g(Generator::Zip(x))?, w.g(Generator::Cozip(x))?])?,
            Rhs::Bordism(w.chain(vec![
                w.g(Generator::OpenCopants)?,
                w.swap(&open, &open)?,
                w.tensor(w.open_twists(conv.cardy.at(x, 0))?, w.ocyl()?)?,
                w.g(Generator::OpenPants)?,
            ])?),
        );
        add(
            "cozip equivariance",
            at.clone(),
            w.chain(vec![w.g(Generator::Twist(x))?, w.g(Generator::Cozip(x))?])?,
            Rhs::Bordism(w.chain(vec![w.g(Generator::Cozip(x))?, w.g(Generator::OpenTwist)?])?),
        );
        add(
            "zip equivariance",
            at.clone(),
            w.chain(vec![w.g(Generator::OpenTwist)?, w.g(Generator::Zip(x))?])?,
            Rhs::Bordism(w.chain(vec![w.g(Generator::Zip(x))?, w.g(Generator::Twist(x))?])?),
        );

        for y in 0..ri {
            let at = format!("x={x} y={y}");
            let p = conv.commutativity.at(x, y);
            add(
                "commutativity",
                at.clone(),
                w.g(Generator::Pants(x, y))?,
                Rhs::Bordism(w.chain(vec![
                    w.swap(&l, &[w.label(y)])?,
                    w.tensor(w.twists(y, p)?, w.cyl(x)?)?,
                    w.g(Generator::Pants(y, x))?,
                ])?),
            );
            add("SL2Z", at.clone(), w.handle(x, conv.torus.at(x, y))?, Rhs::Bordism(w.handle(x + y, conv.torus.at(x + y, y))?));
            let glued = w.chain(vec![w.g(Generator::Cup)?, w.handle(x, conv.torus.at(x, y))?, w.g(Generator::Cap)?])?;
            add("torus", at.clone(), torus(r, x, y)?, Rhs::Map(LinearMap::identity(&frob_algebra::GradedSpace::unit()).scale(&fam.torus(x, y, &conv))));
            add("torus (glued)", at, glued, Rhs::Bordism(torus(r, x, y)?));

            for z in 0..ri {
                let at = format!("x={x} y={y} z={z}");
                add(
                    "associativity",
                    at.clone(),
                    w.chain(vec![w.tensor(w.g(Generator::Pants(x, y))?, w.cyl(z)?)?, w.g(Generator::Pants(x + y - 1, z))?])?,
                    Rhs::Bordism(w.chain(vec![w.tensor(w.cyl(x)?, w.g(Generator::Pants(y, z))?)?, w.g(Generator::Pants(x, y + z - 1))?])?),
                );
                add(
                    "coassociativity",
                    at.clone(),
                    w.chain(vec![w.g(Generator::Copants(x + y + 1, z))?, w.tensor(w.g(Generator::Copants(x, y))?, w.cyl(z)?)?])?,
                    Rhs::Bordism(w.chain(vec![w.g(Generator::Copants(x, y + z + 1))?, w.tensor(w.cyl(x)?, w.g(Generator::Copants(y, z))?)?])?),
                );
                let wl = x + y - 2 - z;
                let middle = w.chain(vec![w.g(Generator::Pants(x, y))?, w.g(Generator::Copants(z, wl))?])?;
                let b = y - wl - 1;
                let left = w.chain(vec![
                    w.tensor(w.cyl(x)?, w.g(Generator::Copants(b, wl))?)?,
                    w.tensor(w.g(Generator::Pants(x, b))?, w.cyl(wl)?)?,
                ])?;
                let b2 = x - z - 1;
                let right = w.chain(vec![
                    w.tensor(w.g(Generator::Copants(z, b2))?, w.cyl(y)?)?,
                    w.tensor(w.cyl(z)?, w.g(Generator::Pants(b2, y))?)?,
                ])?;
                add("Frobenius (left)", at.clone(), left, Rhs::Bordism(middle.clone()));
                add("Frobenius (right)", at, right, Rhs::Bordism(middle));
            }
        }
    }

    let (op, ocp) = (Generator::OpenPants, Generator::OpenCopants);
    add(
        "open associativity",
        String::new(),
        w.chain(vec![w.tensor(w.g(op)?, w.ocyl()?)?, w.g(op)?])?,
        Rhs::Bordism(w.chain(vec![w.tensor(w.ocyl()?, w.g(op)?)?, w.g(op)?])?),
    );
    add(
        "open coassociativity",
        String::new(),
        w.chain(vec![w.g(ocp)?, w.tensor(w.g(ocp)?, w.ocyl()?)?])?,
        Rhs::Bordism(w.chain(vec![w.g(ocp)?, w.tensor(w.ocyl()?, w.g(ocp)?)?])?),
    );
    let middle = w.chain(vec![w.g(op)?, w.g(ocp)?])?;
    add(
        "open Frobenius (left)",
        String::new(),
        w.chain(vec![w.tensor(w.ocyl()?, w.g(ocp)?)?, w.tensor(w.g(op)?, w.ocyl()?)?])?,
        Rhs::Bordism(middle.clone()),
    );
    add(
        "open Frobenius (right)",
        String::new(),
        w.chain(vec![w.tensor(w.g(ocp)?, w.ocyl()?)?, w.tensor(w.ocyl()?, w.g(op)?)?])?,
        Rhs::Bordism(middle),
    );
    for (name, lhs) in [
        ("open left unit", w.chain(vec![w.tensor(w.g(Generator::OpenCup)?, w.ocyl()?)?, w.g(op)?])?),
        ("open right unit", w.chain(vec![w.tensor(w.ocyl()?, w.g(Generator::OpenCup)?)?, w.g(op)?])?),
        ("open left counit", w.chain(vec![w.g(ocp)?, w.tensor(w.g(Generator::OpenCap)?, w.ocyl()?)?])?),
        ("open right counit", w.chain(vec![w.g(ocp)?, w.tensor(w.ocyl()?, w.g(Generator::OpenCap)?)?])?),
    ] {
        add(name, String::new(), lhs, Rhs::Bordism(w.ocyl()?));
    }
    let coev = w.chain(vec![w.g(Generator::OpenCup)?, w.g(ocp)?])?;
    let ev = w.chain(vec![w.g(op)?, w.g(Generator::OpenCap)?])?;
    add("open duality", String::new(), w.chain(vec![w.tensor(w.ocyl()?, coev)?, w.tensor(ev, w.ocyl()?)?])?, Rhs::Bordism(w.ocyl()?));
    add(
        "Nakayama",
        String::new(),
        w.chain(vec![w.g(op)?, w.g(Generator::OpenCap)?])?,
        Rhs::Bordism(w.chain(vec![
            w.swap(&open, &open)?,
            w.tensor(w.open_twists(-1)?, w.ocyl()?)?,
            w.g(op)?,
            w.g(Generator::OpenCap)?,
        ])?),
    );
    add("open twist order", String::new(), w.chain((0..ri).map(|_| w.g(Generator::OpenTwist)).collect::<Result<_, _>>()?)?, Rhs::Bordism(w.ocyl()?));

    let outcomes: Vec<Result<(bool, Option<String>), StateSumError>> = inst
        .par_iter()
        .map(|i| {
            let lhs = evaluate(&i.lhs, data, max_entries)?;
            let rhs = match &i.rhs {
                Rhs::Bordism(b) => evaluate(b, data, max_entries)?,
                Rhs::Map(m) => m.clone(),
            };
            let passed = lhs == rhs;
            Ok((passed, (!passed).then(|| format!("{:?} vs {:?}", lhs.matrix, rhs.matrix))))
        })
        .collect();
    let mut rep = Report::new(format!("generator relations, r = {r}"));
    for (i, o) in inst.iter().zip(outcomes) {
        let (passed, detail) = o?;
        rep.record(i.relation, i.at.clone(), passed, detail);
    }
    Ok(rep)
}
