use crate::algebra::FrobeniusAlgebra;
use crate::closed::{ClosedFamily, Conventions};
use crate::linear::LinearMap;
use crate::report::Report;
use crate::AlgebraError;

/// Checks that `(A, C)` with `ι_x : C_x -> A` and `π_x : A -> C_x` is a
/// knowledgeable Λ_r-Frobenius algebra: the knowledge, duality and Cardy
/// relations for every label, plus the structural conditions they rely on.
pub fn check_knowledgeable(
    a: &FrobeniusAlgebra,
    c: &ClosedFamily,
    iota: &[LinearMap],
    pi: &[LinearMap],
    conv: &Conventions,
) -> Result<Report, AlgebraError> {
    let mut rep = Report::new("knowledgeable pair");
    let r = c.r;
    if iota.len() != r as usize || pi.len() != r as usize {
        return Err(AlgebraError::Shape(format!("expected {r} inclusions and projections")));
    }
    let id = LinearMap::identity(&a.space);
    let nak = a.nakayama()?;
    for name in a.axiom_failures() {
        rep.record(&format!("algebra {name}"), "", false, None);
    }
    rep.check_eq("N^r = id", format!("r={r}"), &nak.pow(r), &id);
    let sigma = LinearMap::braiding(&a.space, &a.space);
    for x in 0..i64::from(r) {
        let at = format!("x={x}");
        let (i, p) = (&iota[c.idx(x)], &pi[c.idx(x)]);
        if i.source != *c.space(x) || i.target != a.space || p.source != a.space || p.target != *c.space(x) {
            return Err(AlgebraError::Shape(format!("ι/π at x={x} have wrong shape")));
        }
        rep.check_eq("ι intertwines", at.clone(), &nak.after(i), &i.after(c.n(x)));
        rep.check_eq("π intertwines", at.clone(), &p.after(&nak), &c.n(x).after(p));

        let q = conv.knowledge.at(x, 0);
        let lhs = a.mu.after(&i.tensor(&id));
        let rhs = a.mu.after(&a.nakayama_pow(q)?.tensor(i)).after(&LinearMap::braiding(c.space(x), &a.space));
        rep.check_eq("knowledge", at.clone(), &lhs, &rhs);

        let neg = &iota[c.idx(-x)];
        let lhs = c.epsilon.after(c.mu(x, -x)).after(&p.tensor(&c.id(-x)));
        let rhs = a.epsilon.after(&a.mu).after(&id.tensor(neg));
        rep.check_eq("duality", at.clone(), &lhs, &rhs);

        let m = conv.cardy.at(x, 0);
        let lhs = i.after(p);
        let rhs = a.mu.after(&a.nakayama_pow(m)?.tensor(&id)).after(&sigma).after(&a.delta);
        rep.check_eq("Cardy", at, &lhs, &rhs);
    }
    Ok(rep)
}
