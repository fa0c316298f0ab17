//! Built-in verified examples: five six-dimensional nilpotent algebras with
//! compatible integrable (-1,-1)-structures, and a four-dimensional solvable
//! algebra carrying a curve of integrable (1,-1)-structures joining a
//! Riemannian product structure with a Kahler (or strictly almost Kahler)
//! structure. `verify_entry` re-derives every stored claim from scratch.

mod data;

use crate::error::{Error, Result};
use crate::exactla::{rank, rat, Matrix, Rational, Sign};
use crate::extended::{
    build_extremal, curve_point, eigenspace_involutivity, from_classical, nijenhuis_integrability,
    to_classical, CurveSpec, ExtendedSpace, ExtremalKind, GenStructure, PseudoMetric,
};
use crate::liealg::{parse_salamon, LieAlgebra};
use crate::report::{Check, Report};
use crate::RatMatrix;

/// One term of a mixed cotangent bracket table: [e_i, e_j*] contains
/// c * e_k* (1-based indices).
#[derive(Debug, Clone, PartialEq)]
pub struct MixedTerm {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub c: Rational,
}

/// The structure content of an entry.
#[derive(Debug, Clone)]
pub enum EntryKind {
    /// A (-1,-1)-structure given by its classical endomorphism pair.
    Nilmanifold { a: RatMatrix, b: RatMatrix },
    /// A curve of (1,-1)-structures joining the product structure `r` with
    /// the symplectic structures omega_eps for eps = +/-1.
    InterpolationCurve {
        r: RatMatrix,
        samples: Vec<Rational>,
    },
}

/// A named example: algebra, metric (with its basis presentation when the
/// source gives one), structures, and the expected mixed bracket table of
/// the cotangent algebra.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub algebra: LieAlgebra,
    pub salamon: Option<String>,
    pub metric: PseudoMetric,
    /// (C, P) when the Gram matrix C was given in the basis with columns P.
    pub metric_basis: Option<(RatMatrix, RatMatrix)>,
    pub expected_mixed: Vec<MixedTerm>,
    pub expected_signature: (usize, usize),
    pub kind: EntryKind,
}

impl CatalogEntry {
    pub fn lambda_ell(&self) -> (Sign, Sign) {
        match self.kind {
            EntryKind::Nilmanifold { .. } => (Sign::Minus, Sign::Minus),
            EntryKind::InterpolationCurve { .. } => (Sign::Plus, Sign::Minus),
        }
    }

    /// The primary structure: the assembled S for nilmanifolds, the
    /// block-diagonal endpoint R for the curve entry.
    pub fn primary_structure(&self) -> Result<GenStructure> {
        let (lambda, ell) = self.lambda_ell();
        match &self.kind {
            EntryKind::Nilmanifold { a, b } => {
                let cf = crate::extended::ClassicalForm::new(a.clone(), b.clone())?;
                from_classical(&cf, lambda, ell, &self.metric)
            }
            EntryKind::InterpolationCurve { r, .. } => {
                build_extremal(ExtremalKind::Product, r, lambda, ell, &self.metric)
            }
        }
    }

    /// The off-diagonal endpoint Q_eps of the curve entry.
    pub fn curve_q(&self, eps: Sign) -> Result<GenStructure> {
        match &self.kind {
            EntryKind::InterpolationCurve { .. } => {
                let (lambda, ell) = self.lambda_ell();
                build_extremal(
                    ExtremalKind::Symplectic,
                    &data::ellipse_omega(eps),
                    lambda,
                    ell,
                    &self.metric,
                )
            }
            EntryKind::Nilmanifold { .. } => Err(Error::UnknownEntry(format!(
                "{} has no interpolation curve",
                self.name
            ))),
        }
    }

    /// Curve point Phi_eps at the Weierstrass parameter s.
    pub fn curve_structure(&self, eps: Sign, s: &Rational) -> Result<GenStructure> {
        let r = self.primary_structure()?;
        let q = self.curve_q(eps)?;
        let spec = CurveSpec::new(r, q, s.clone())?;
        let space = ExtendedSpace::new(self.metric.clone(), spec.r.k());
        curve_point(&spec, &space)
    }
}

pub fn names() -> Vec<&'static str> {
    vec!["g1", "g2", "g3", "g4", "g5", "ellipse"]
}

/// Fetches an entry by name, rebuilding it from the raw tables.
pub fn catalog_get(name: &str) -> Result<CatalogEntry> {
    match name {
        "g1" | "g2" | "g3" | "g4" | "g5" => {
            let spec = data::salamon_string(name);
            let algebra = parse_salamon(spec)?;
            let (metric, metric_basis) = if name == "g1" {
                let (c, p) = data::g1_metric_basis();
                (
                    PseudoMetric::from_basis(c.clone(), p.clone())?,
                    Some((c, p)),
                )
            } else {
                (
                    PseudoMetric::new(RatMatrix::diagonal(data::metric_diag(name)))?,
                    None,
                )
            };
            let expected_signature = match name {
                "g1" => (3, 3),
                "g5" => (4, 2),
                _ => (5, 1),
            };
            Ok(CatalogEntry {
                name: name.to_string(),
                algebra,
                salamon: Some(spec.to_string()),
                metric,
                metric_basis,
                expected_mixed: data::nil_mixed_table(name),
                expected_signature,
                kind: EntryKind::Nilmanifold {
                    a: data::sparse(6, &data::a_table(name)),
                    b: data::sparse(6, &data::b_table(name)),
                },
            })
        }
        "ellipse" => {
            let algebra = LieAlgebra::from_brackets(4, &data::ellipse_brackets())?;
            Ok(CatalogEntry {
                name: "ellipse".to_string(),
                algebra,
                salamon: None,
                metric: PseudoMetric::standard(4, 0),
                metric_basis: None,
                expected_mixed: data::ellipse_mixed_table(),
                expected_signature: (4, 0),
                kind: EntryKind::InterpolationCurve {
                    r: RatMatrix::diagonal(data::ellipse_r_diag()),
                    samples: data::default_samples(),
                },
            })
        }
        other => Err(Error::UnknownEntry(other.to_string())),
    }
}

/// Re-verifies every stored claim of an entry: Jacobi, cotangent table,
/// structure assembly, the four axioms, and integrability (Nijenhuis for
/// the complex-type entries; eigenspace involutivity with span cross-checks
/// at each curve sample for the paracomplex-type entry).
pub fn verify_entry(entry: &CatalogEntry, samples: Option<&[Rational]>) -> Report {
    let mut report = Report::new(format!("catalog entry {}", entry.name));

    report.push(Check::of(
        "jacobi identity",
        entry.algebra.jacobi_check().is_empty(),
    ));

    let sig = entry.metric.signature();
    report.push(
        Check::of(
            "metric signature",
            (sig.positive, sig.negative) == entry.expected_signature && sig.zero == 0,
        )
        .with_note(format!("({},{})", sig.positive, sig.negative)),
    );

    let cotangent = match entry.algebra.cotangent_algebra() {
        Ok(t) => t,
        Err(e) => {
            report.push(Check::fail("cotangent algebra jacobi").with_note(e.to_string()));
            return report;
        }
    };
    report.push(Check::pass("cotangent algebra jacobi"));
    report.push(check_mixed_table(entry, &cotangent));

    match &entry.kind {
        EntryKind::Nilmanifold { a, b } => {
            verify_nilmanifold(entry, &cotangent, a, b, &mut report);
        }
        EntryKind::InterpolationCurve {
            r,
            samples: default_samples,
        } => {
            let samples = samples.unwrap_or(default_samples);
            verify_curve(entry, &cotangent, r, samples, &mut report);
        }
    }
    report
}

/// Mixed brackets [e_i, e_j*] must match the stored table entry-for-entry
/// and vanish elsewhere; their tangent components must vanish identically.
fn check_mixed_table(entry: &CatalogEntry, cotangent: &LieAlgebra) -> Check {
    let m = entry.algebra.dim();
    let mut expected = vec![vec![RatMatrix::zeros(m, 1); m]; m];
    for t in &entry.expected_mixed {
        expected[t.i - 1][t.j - 1][(t.k - 1, 0)] += &t.c;
    }
    for i in 0..m {
        for j in 0..m {
            let full = cotangent.bracket_basis(i, m + j);
            if !full.block(0, 0, m, 1).is_zero_matrix() {
                return Check::fail("cotangent mixed table").with_note(format!(
                    "[e{}, e{}*] has a tangent component",
                    i + 1,
                    j + 1
                ));
            }
            if cotangent.mixed_bracket(i, j) != expected[i][j] {
                return Check::fail("cotangent mixed table")
                    .with_note(format!("[e{}, e{}*] differs from the table", i + 1, j + 1))
                    .with_witness(&full);
            }
        }
    }
    Check::pass("cotangent mixed table").with_note(format!("{} x {} mixed pairs", m, m))
}

fn verify_nilmanifold(
    entry: &CatalogEntry,
    cotangent: &LieAlgebra,
    a: &RatMatrix,
    b: &RatMatrix,
    report: &mut Report,
) {
    let structure = match entry.primary_structure() {
        Ok(s) => s,
        Err(e) => {
            report.push(Check::fail("classical assembly (A, B)").with_note(e.to_string()));
            return;
        }
    };
    report.push(Check::pass("classical assembly (A, B)"));

    // round trip through the block decomposition
    match to_classical(&structure, &entry.metric) {
        Ok(cf) => report.push(Check::of("classical round trip", cf.a == *a && cf.b == *b)),
        Err(e) => report.push(Check::fail("classical round trip").with_note(e.to_string())),
    }

    let space = ExtendedSpace::new(entry.metric.clone(), structure.k());
    match structure.verify_algebraic(&space) {
        Ok(alg) => {
            for outcome in alg.outcomes() {
                report.push(outcome.to_check());
            }
        }
        Err(e) => report.push(Check::fail("algebraic checks").with_note(e.to_string())),
    }

    match nijenhuis_integrability(cotangent, &structure) {
        Ok(nij) => {
            let mut check = Check::of("nijenhuis tensor vanishes", nij.vanishes())
                .with_note(format!("{} basis pairs", nij.pairs_checked));
            if let Some((i, j, value)) = nij.failures.first() {
                check = check
                    .with_note(format!("nonzero at pair ({i}, {j})"))
                    .with_witness(value);
            }
            report.push(check);
        }
        Err(e) => report.push(Check::fail("nijenhuis tensor vanishes").with_note(e.to_string())),
    }
}

fn verify_curve(
    entry: &CatalogEntry,
    cotangent: &LieAlgebra,
    r: &RatMatrix,
    samples: &[Rational],
    report: &mut Report,
) {
    // the eigendistributions of r are subalgebras of g
    let m = entry.algebra.dim();
    for (delta, label) in [(rat(1), "D(1)"), (rat(-1), "D(-1)")] {
        let shifted = r - &RatMatrix::identity(m).scale(&delta);
        let (_, basis) = match crate::exactla::rref_kernel(&shifted) {
            Ok(v) => v,
            Err(e) => {
                report.push(Check::fail("product eigendistributions").with_note(e.to_string()));
                return;
            }
        };
        match entry.algebra.subalgebra_check(&basis) {
            Ok(c) => report.push(Check::of(
                format!("{label} of r is a subalgebra of g"),
                c.closed,
            )),
            Err(e) => report.push(
                Check::fail(format!("{label} of r is a subalgebra of g")).with_note(e.to_string()),
            ),
        }
    }

    let structure_r = match entry.primary_structure() {
        Ok(s) => s,
        Err(e) => {
            report.push(Check::fail("extremal R").with_note(e.to_string()));
            return;
        }
    };
    let space = ExtendedSpace::new(entry.metric.clone(), structure_r.k());
    report.push(Check::of(
        "extremal R passes the axioms",
        structure_r
            .verify_algebraic(&space)
            .map(|r| r.passed())
            .unwrap_or(false),
    ));

    for eps in [Sign::Plus, Sign::Minus] {
        let q = match entry.curve_q(eps) {
            Ok(q) => q,
            Err(e) => {
                report.push(
                    Check::fail(format!("extremal Q (eps = {eps})")).with_note(e.to_string()),
                );
                continue;
            }
        };
        report.push(Check::of(
            format!("extremal Q passes the axioms (eps = {eps})"),
            q.verify_algebraic(&space)
                .map(|r| r.passed())
                .unwrap_or(false),
        ));
        let anti = &(&structure_r.matrix * &q.matrix) + &(&q.matrix * &structure_r.matrix);
        report.push(Check::of(
            format!("R and Q anti-commute (eps = {eps})"),
            anti.is_zero_matrix(),
        ));

        for s in samples {
            let label = format!("eps = {eps}, s = {}", crate::exactla::rational_to_string(s));
            let point = match entry.curve_structure(eps, s) {
                Ok(p) => p,
                Err(e) => {
                    report.push(
                        Check::fail(format!("curve point axioms ({label})"))
                            .with_note(e.to_string()),
                    );
                    continue;
                }
            };
            report.push(Check::pass(format!("curve point axioms ({label})")));

            for delta in [Sign::Plus, Sign::Minus] {
                let name = format!("D({delta}) involutive, dim 4 ({label})");
                match eigenspace_involutivity(cotangent, &point, delta) {
                    Ok(inv) => {
                        let dim_ok = inv.basis.dim() == entry.algebra.dim();
                        let span_ok = curve_span_matches(entry, eps, s, delta, &inv.basis.vectors);
                        report.push(Check::of(name, inv.closed && dim_ok));
                        report.push(Check::of(
                            format!("eigenspace span matches the stored generators ({label}, delta = {delta})"),
                            span_ok,
                        ));
                    }
                    Err(e) => report.push(Check::fail(name).with_note(e.to_string())),
                }
            }
        }
    }
}

/// The four stored generators of D_eps(delta) at the Weierstrass point s:
///   -sin e1 + (cos - delta) e2*,     sin e2 + (cos - delta) e1*,
///   eps sin e3 + (cos + delta) e4*, -eps sin e4 + (cos + delta) e3*.
/// At generic s they are independent and must span the eigenspace exactly;
/// at the endpoints some vanish and only containment is claimed.
fn curve_span_matches(
    entry: &CatalogEntry,
    eps: Sign,
    s: &Rational,
    delta: Sign,
    eigenbasis: &[RatMatrix],
) -> bool {
    let m = entry.algebra.dim();
    let dim = 2 * m;
    let spec = CurveSpec {
        r: match entry.primary_structure() {
            Ok(r) => r,
            Err(_) => return false,
        },
        q: match entry.curve_q(eps) {
            Ok(q) => q,
            Err(_) => return false,
        },
        s: s.clone(),
    };
    let (cos, sin) = spec.cos_sin();
    let d = delta.rational();
    let mut stored = Vec::new();
    let mut v1 = RatMatrix::zeros(dim, 1);
    v1[(0, 0)] = -sin.clone();
    v1[(m + 1, 0)] = &cos - &d;
    stored.push(v1);
    let mut v2 = RatMatrix::zeros(dim, 1);
    v2[(1, 0)] = sin.clone();
    v2[(m, 0)] = &cos - &d;
    stored.push(v2);
    let mut v3 = RatMatrix::zeros(dim, 1);
    v3[(2, 0)] = eps.rational() * &sin;
    v3[(m + 3, 0)] = &cos + &d;
    stored.push(v3);
    let mut v4 = RatMatrix::zeros(dim, 1);
    v4[(3, 0)] = -(eps.rational() * &sin);
    v4[(m + 2, 0)] = &cos + &d;
    stored.push(v4);

    let stored_refs: Vec<&RatMatrix> = stored.iter().collect();
    let stored_stack = Matrix::hstack(&stored_refs);
    let eigen_refs: Vec<&RatMatrix> = eigenbasis.iter().collect();
    let eigen_stack = Matrix::hstack(&eigen_refs);
    let combined = Matrix::hstack(&[&eigen_stack, &stored_stack]);

    let (Ok(rank_stored), Ok(rank_eigen), Ok(rank_combined)) =
        (rank(&stored_stack), rank(&eigen_stack), rank(&combined))
    else {
        return false;
    };
    if rank_stored == eigenbasis.len() {
        // generic point: spans must coincide
        rank_combined == rank_eigen && rank_stored == rank_eigen
    } else {
        // degenerate sample: the stored vectors must lie inside the eigenspace
        rank_combined == rank_eigen
    }
}
