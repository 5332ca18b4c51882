//! Discrete phase space GF(2^n) x GF(2^n): additive curves, their census,
//! bundles of mutually non-intersecting curves, and striations.
//!
//! A curve is the image of kappa -> (alpha(kappa), beta(kappa)) where both
//! coordinates are linearized polynomials `sum_m c_m kappa^(2^m)`. Accepted
//! curves are nonsingular (injective parametrization) and satisfy the
//! commutativity condition that makes their displacement operators pairwise
//! commute. Curve identity is the point set; the stored coefficient vector is
//! a canonical representative (lowest degree first, then lexicographically
//! least), so equal point sets compare equal structurally.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::gf::{Field, FieldElement};
use crate::Error;

/// Largest degree for which exhaustive enumeration runs.
pub const ENUMERATION_MAX: u32 = 3;

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point {
    pub alpha: FieldElement,
    pub beta: FieldElement,
}

impl Point {
    pub fn new(alpha: FieldElement, beta: FieldElement) -> Point {
        Point { alpha, beta }
    }

    pub fn origin() -> Point {
        Point {
            alpha: FieldElement::ZERO,
            beta: FieldElement::ZERO,
        }
    }

    pub fn is_origin(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero()
    }

    fn code(&self, field: &Field) -> u32 {
        u32::from(self.alpha.val()) * field.order() + u32::from(self.beta.val())
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveClass {
    Ray,
    RegularAlpha,
    RegularBeta,
    Exceptional,
}

impl CurveClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CurveClass::Ray => "ray",
            CurveClass::RegularAlpha => "regular_alpha",
            CurveClass::RegularBeta => "regular_beta",
            CurveClass::Exceptional => "exceptional",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct CurveKind {
    pub class: CurveClass,
    pub alpha_degenerate: bool,
    pub beta_degenerate: bool,
    /// Nonlinear curve expressible as a graph over either coordinate.
    pub symmetric: bool,
}

#[derive(Clone, Debug)]
pub struct Curve {
    mu: Vec<FieldElement>,
    eta: Vec<FieldElement>,
    points: Vec<Point>,
    kind: CurveKind,
}

impl PartialEq for Curve {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for Curve {}

#[derive(Serialize)]
pub struct CurveJson {
    pub mu: Vec<u16>,
    pub eta: Vec<u16>,
    pub points: Vec<[u16; 2]>,
    pub kind: &'static str,
}

impl Curve {
    pub fn mu(&self) -> &[FieldElement] {
        &self.mu
    }

    pub fn eta(&self) -> &[FieldElement] {
        &self.eta
    }

    /// All d points, sorted, origin first.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn nonzero_points(&self) -> impl Iterator<Item = &Point> {
        self.points.iter().filter(|p| !p.is_origin())
    }

    pub fn kind(&self) -> CurveKind {
        self.kind
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson {
            mu: self.mu.iter().map(|c| c.val()).collect(),
            eta: self.eta.iter().map(|c| c.val()).collect(),
            points: self
                .points
                .iter()
                .map(|p| [p.alpha.val(), p.beta.val()])
                .collect(),
            kind: self.kind.class.as_str(),
        }
    }
}

/// Evaluates a linearized polynomial `sum_m coeffs[m] * x^(2^m)`.
pub fn eval_additive(field: &Field, coeffs: &[FieldElement], x: FieldElement) -> FieldElement {
    let mut acc = FieldElement::ZERO;
    let mut power = x;
    for &c in coeffs {
        acc = field.add(acc, field.mul(c, power));
        power = field.frobenius(power);
    }
    acc
}

/// Packed defect components `D_1..D_{n-1}`, n bits each, where
/// `D_j = sum_m Frob^{-m}(mu_m eta_{m+j} + mu_{m+j} eta_m)`. All zero means
/// the coefficient pair passes the commutativity condition. For fixed mu the
/// whole word is GF(2)-linear in the bits of eta.
fn commutation_defects(field: &Field, mu: &[FieldElement], eta: &[FieldElement]) -> u64 {
    let n = field.degree() as usize;
    let mut packed = 0u64;
    for j in 1..n {
        let mut d = FieldElement::ZERO;
        for m in 0..n {
            let cross = field.add(
                field.mul(mu[m], eta[(m + j) % n]),
                field.mul(mu[(m + j) % n], eta[m]),
            );
            let mut t = cross;
            for _ in 0..((n - m) % n) {
                t = field.frobenius(t);
            }
            d = field.add(d, t);
        }
        packed |= u64::from(d.val()) << ((j - 1) * n);
    }
    packed
}

/// Exact commutativity condition on the coefficients: every defect component
/// must vanish. At n = 2 this is the single trace identity
/// tr(mu_0 eta_1) = tr(mu_1 eta_0); the operator-commutation oracle test pins
/// the general form.
pub fn commutativity_condition(field: &Field, mu: &[FieldElement], eta: &[FieldElement]) -> bool {
    commutation_defects(field, mu, eta) == 0
}

/// Curve-level view of the same condition.
pub fn check_commutativity_condition(field: &Field, curve: &Curve) -> bool {
    commutativity_condition(field, &curve.mu, &curve.eta)
}

fn resolve_points(
    field: &Field,
    mu: &[FieldElement],
    eta: &[FieldElement],
) -> Result<Vec<Point>, Error> {
    let mut pts: Vec<Point> = field
        .elements()
        .map(|k| Point::new(eval_additive(field, mu, k), eval_additive(field, eta, k)))
        .collect();
    pts.sort();
    pts.dedup();
    if pts.len() != field.order() as usize {
        return Err(Error::SingularCurve);
    }
    Ok(pts)
}

fn classify(field: &Field, points: &[Point]) -> CurveKind {
    let d = field.order() as usize;
    let mut alphas: Vec<u16> = points.iter().map(|p| p.alpha.val()).collect();
    alphas.sort_unstable();
    alphas.dedup();
    let mut betas: Vec<u16> = points.iter().map(|p| p.beta.val()).collect();
    betas.sort_unstable();
    betas.dedup();
    let alpha_degenerate = alphas.len() < d;
    let beta_degenerate = betas.len() < d;

    let is_ray = {
        let p = points.iter().find(|p| !p.is_origin());
        match p {
            None => false,
            Some(p) => field.elements().all(|c| {
                let q = Point::new(field.mul(c, p.alpha), field.mul(c, p.beta));
                points.binary_search(&q).is_ok()
            }),
        }
    };

    let class = if is_ray {
        CurveClass::Ray
    } else if alpha_degenerate && beta_degenerate {
        CurveClass::Exceptional
    } else if !alpha_degenerate {
        CurveClass::RegularAlpha
    } else {
        CurveClass::RegularBeta
    };
    CurveKind {
        class,
        alpha_degenerate,
        beta_degenerate,
        symmetric: !is_ray && !alpha_degenerate && !beta_degenerate,
    }
}

type CoeffKey = (i32, i32, Vec<u16>, Vec<u16>);
type CoeffPair = (Vec<FieldElement>, Vec<FieldElement>);

// Canonical-representative comparison: lowest top degree of mu, then of eta,
// then plain lexicographic coefficients. Degree-major comparison makes linear
// parametrizations canonical for rays instead of their Frobenius twins.
fn coeff_key(mu: &[FieldElement], eta: &[FieldElement]) -> CoeffKey {
    let deg = |v: &[FieldElement]| {
        v.iter()
            .rposition(|c| !c.is_zero())
            .map_or(-1, |i| i as i32)
    };
    (
        deg(mu),
        deg(eta),
        mu.iter().map(|c| c.val()).collect(),
        eta.iter().map(|c| c.val()).collect(),
    )
}

/// All invertible linearized polynomials (reparametrizations kappa -> L(kappa)).
fn invertible_reparametrizations(field: &Field) -> Vec<Vec<FieldElement>> {
    let n = field.degree() as usize;
    let d = field.order() as usize;
    let total = d.pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let coeffs = decode_coeffs(field, code, n);
        let mut seen = vec![false; d];
        let mut distinct = true;
        for k in field.elements() {
            let v = eval_additive(field, &coeffs, k).val() as usize;
            if seen[v] {
                distinct = false;
                break;
            }
            seen[v] = true;
        }
        if distinct {
            out.push(coeffs);
        }
    }
    out
}

fn decode_coeffs(field: &Field, mut code: usize, n: usize) -> Vec<FieldElement> {
    let d = field.order() as usize;
    let mut coeffs = Vec::with_capacity(n);
    for _ in 0..n {
        coeffs.push(field.element((code % d) as u16).expect("in range"));
        code /= d;
    }
    coeffs
}

/// Coefficients of the composition A(L(kappa)) of two linearized polynomials.
fn compose_linearized(field: &Field, a: &[FieldElement], l: &[FieldElement]) -> Vec<FieldElement> {
    let n = field.degree() as usize;
    let mut out = vec![FieldElement::ZERO; n];
    for (m, &am) in a.iter().enumerate() {
        if am.is_zero() {
            continue;
        }
        for (k, &lk) in l.iter().enumerate() {
            let mut t = lk;
            for _ in 0..m {
                t = field.frobenius(t);
            }
            let j = (m + k) % n;
            out[j] = field.add(out[j], field.mul(am, t));
        }
    }
    out
}

fn canonical_coeffs(field: &Field, mu: &[FieldElement], eta: &[FieldElement]) -> CoeffPair {
    let mut best: Option<(CoeffKey, CoeffPair)> = None;
    for l in invertible_reparametrizations(field) {
        let m2 = compose_linearized(field, mu, &l);
        let e2 = compose_linearized(field, eta, &l);
        let key = coeff_key(&m2, &e2);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, (m2, e2)));
        }
    }
    best.expect("identity reparametrization always present").1
}

fn build_curve(
    field: &Field,
    mu: Vec<FieldElement>,
    eta: Vec<FieldElement>,
    canonicalize: bool,
) -> Result<Curve, Error> {
    let n = field.degree() as usize;
    if mu.len() != n {
        return Err(Error::CoefficientCount {
            expected: n,
            got: mu.len(),
        });
    }
    if eta.len() != n {
        return Err(Error::CoefficientCount {
            expected: n,
            got: eta.len(),
        });
    }
    if !commutativity_condition(field, &mu, &eta) {
        return Err(Error::NoncommutingCurve);
    }
    let points = resolve_points(field, &mu, &eta)?;
    // Additivity is structural for linearized parametrizations; the exhaustive
    // pairwise check guards against arithmetic regressions.
    for p in &points {
        for q in &points {
            let sum = Point::new(field.add(p.alpha, q.alpha), field.add(p.beta, q.beta));
            if points.binary_search(&sum).is_err() {
                return Err(Error::Internal("additivity check failed".into()));
            }
        }
    }
    let (mu, eta) = if canonicalize {
        canonical_coeffs(field, &mu, &eta)
    } else {
        (mu, eta)
    };
    let kind = classify(field, &points);
    Ok(Curve {
        mu,
        eta,
        points,
        kind,
    })
}

/// Accepts a parametrization, validates it, and stores the canonical
/// representative of its point set.
pub fn curve_from_coeffs(
    field: &Field,
    mu: Vec<FieldElement>,
    eta: Vec<FieldElement>,
) -> Result<Curve, Error> {
    build_curve(field, mu, eta, true)
}

/// The ray alpha = eta*kappa, beta = zeta*kappa. Proportional direction pairs
/// produce the same point set and hence the same canonical curve.
pub fn ray(field: &Field, eta: FieldElement, zeta: FieldElement) -> Result<Curve, Error> {
    if eta.is_zero() && zeta.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let n = field.degree() as usize;
    let mut mu = vec![FieldElement::ZERO; n];
    let mut ev = vec![FieldElement::ZERO; n];
    mu[0] = eta;
    ev[0] = zeta;
    curve_from_coeffs(field, mu, ev)
}

/// Rebuilds the canonical curve through a given point set (an additive
/// subgroup of size d whose points pairwise satisfy the trace condition).
pub fn curve_from_point_set(field: &Field, points: &[Point]) -> Result<Curve, Error> {
    let n = field.degree() as usize;
    let d = field.order() as usize;
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort();
    sorted.dedup();
    if sorted.len() != d || !sorted[0].is_origin() {
        return Err(Error::NotASubgroup);
    }
    for p in &sorted {
        for q in &sorted {
            let sum = Point::new(field.add(p.alpha, q.alpha), field.add(p.beta, q.beta));
            if sorted.binary_search(&sum).is_err() {
                return Err(Error::NotASubgroup);
            }
        }
    }
    // Bit-basis of the subgroup (codes are (alpha bits | beta bits)).
    let pack = |p: &Point| (u32::from(p.alpha.val()) << n) | u32::from(p.beta.val());
    let mut basis: Vec<(u32, Point)> = Vec::new();
    for p in sorted.iter().filter(|p| !p.is_origin()) {
        let mut code = pack(p);
        for (b, _) in &basis {
            code = code.min(code ^ b);
        }
        if code != 0 {
            // Reduce the stored point the same way for a consistent pair.
            let mut reduced = *p;
            let mut c = pack(p);
            for (b, q) in &basis {
                if (c ^ b) < c {
                    c ^= b;
                    reduced = Point::new(
                        field.add(reduced.alpha, q.alpha),
                        field.add(reduced.beta, q.beta),
                    );
                }
            }
            basis.push((c, reduced));
        }
        if basis.len() == n {
            break;
        }
    }
    if basis.len() != n {
        return Err(Error::NotASubgroup);
    }
    // Send the standard field basis x^i to the subgroup basis and solve the
    // Moore system for the coefficient vectors of both coordinates.
    let domain: Vec<FieldElement> = (0..n)
        .map(|i| field.element(1 << i).expect("in range"))
        .collect();
    let alphas: Vec<FieldElement> = basis.iter().map(|(_, p)| p.alpha).collect();
    let betas: Vec<FieldElement> = basis.iter().map(|(_, p)| p.beta).collect();
    let mu = solve_moore(field, &domain, &alphas)?;
    let eta = solve_moore(field, &domain, &betas)?;
    curve_from_coeffs(field, mu, eta)
}

// Solves sum_m c_m g_i^(2^m) = t_i for the coefficients c_m; the Moore matrix
// of an independent family is invertible.
fn solve_moore(
    field: &Field,
    generators: &[FieldElement],
    targets: &[FieldElement],
) -> Result<Vec<FieldElement>, Error> {
    let n = generators.len();
    let mut rows: Vec<Vec<FieldElement>> = Vec::with_capacity(n);
    for (i, &g) in generators.iter().enumerate() {
        let mut row = Vec::with_capacity(n + 1);
        let mut p = g;
        for _ in 0..n {
            row.push(p);
            p = field.frobenius(p);
        }
        row.push(targets[i]);
        rows.push(row);
    }
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !rows[r][col].is_zero())
            .ok_or_else(|| Error::Internal("singular Moore system".into()))?;
        rows.swap(col, pivot);
        let inv = field.inv(rows[col][col])?;
        for v in rows[col].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col];
                for (v, &p) in row.iter_mut().zip(&pivot_row) {
                    *v = field.add(*v, field.mul(factor, p));
                }
            }
        }
    }
    Ok((0..n).map(|i| rows[i][n]).collect())
}

/// True when the curves share no point besides the origin.
pub fn intersect_only_at_origin(a: &Curve, b: &Curve) -> bool {
    a.nonzero_points().all(|p| !b.contains(p))
}

/// Exhaustive census of nonsingular commuting additive curves, ordered by
/// sorted point set. Every coefficient vector is scanned, so the stored
/// representative is the canonical one by construction.
pub fn enumerate_structures(field: &Field) -> Result<Vec<Curve>, Error> {
    let n = field.degree();
    if n > ENUMERATION_MAX {
        return Err(Error::ExhaustiveRangeExceeded {
            n,
            max: ENUMERATION_MAX,
        });
    }
    let nn = n as usize;
    let d = field.order() as usize;
    let total = d.pow(n);
    // kappa -> value tables for every coefficient vector, shared by both axes.
    let tables: Vec<(Vec<FieldElement>, Vec<u16>)> = (0..total)
        .map(|code| {
            let coeffs = decode_coeffs(field, code, nn);
            let vals = field
                .elements()
                .map(|k| eval_additive(field, &coeffs, k).val())
                .collect();
            (coeffs, vals)
        })
        .collect();

    let found: Vec<(u64, Vec<FieldElement>, Vec<FieldElement>)> = (0..total)
        .into_par_iter()
        .flat_map_iter(|mc| {
            let field = field.clone();
            let tables = &tables;
            (0..total).filter_map(move |ec| {
                let (mu, avals) = &tables[mc];
                let (eta, bvals) = &tables[ec];
                let mut mask = 0u64;
                for k in 0..d {
                    mask |= 1 << (u64::from(avals[k]) * d as u64 + u64::from(bvals[k]));
                }
                if mask.count_ones() as usize != d {
                    return None;
                }
                if !commutativity_condition(&field, mu, eta) {
                    return None;
                }
                Some((mask, mu.clone(), eta.clone()))
            })
        })
        .collect();

    let mut best: BTreeMap<u64, (Vec<FieldElement>, Vec<FieldElement>)> = BTreeMap::new();
    for (mask, mu, eta) in found {
        match best.get(&mask) {
            Some((m, e)) if coeff_key(m, e) <= coeff_key(&mu, &eta) => {}
            _ => {
                best.insert(mask, (mu, eta));
            }
        }
    }

    let mut curves: Vec<Curve> = best
        .into_values()
        .map(|(mu, eta)| build_curve(field, mu, eta, false))
        .collect::<Result<_, _>>()?;
    curves.sort_by(|a, b| a.points.cmp(&b.points));
    Ok(curves)
}

/// Uniform draw from the space of eta vectors that pass the commutativity
/// condition against the given mu. The defect word is GF(2)-linear in the
/// eta bits, so the images of the n^2 unit bits are XOR-eliminated into a
/// pivot basis and the combinations that reduce to zero span the kernel.
fn random_commuting_eta(
    field: &Field,
    mu: &[FieldElement],
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Vec<FieldElement> {
    let n = field.degree() as usize;
    let mut pivots: Vec<(u64, u64)> = Vec::new();
    let mut kernel: Vec<u64> = Vec::new();
    for t in 0..n {
        for b in 0..n {
            let mut unit = vec![FieldElement::ZERO; n];
            unit[t] = field.element(1 << b).expect("unit bit in range");
            let mut image = commutation_defects(field, mu, &unit);
            let mut combo = 1u64 << (t * n + b);
            for &(pi, pc) in &pivots {
                if (image ^ pi) < image {
                    image ^= pi;
                    combo ^= pc;
                }
            }
            if image == 0 {
                kernel.push(combo);
            } else {
                pivots.push((image, combo));
            }
        }
    }
    let mut pick = 0u64;
    for &k in &kernel {
        if rng.gen_bool(0.5) {
            pick ^= k;
        }
    }
    let mask = (1u32 << n) - 1;
    (0..n)
        .map(|t| {
            let bits = (pick >> (t * n)) as u32 & mask;
            field.element(bits as u16).expect("kernel bits in range")
        })
        .collect()
}

/// Seeded randomized search for structures, for degrees beyond the exhaustive
/// range. Each draw picks the mu side uniformly and then solves the
/// commutativity condition for a uniform eta, leaving only nonsingularity to
/// rejection. Results are deduplicated by point set but carry whatever
/// parametrization the sampler hit first; coefficients are canonicalized only
/// within the exhaustive range.
pub fn sample_structures(field: &Field, samples: u64, seed: u64) -> Vec<Curve> {
    let n = field.degree() as usize;
    let d = u64::from(field.order());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut seen: BTreeMap<Vec<Point>, Curve> = BTreeMap::new();
    for _ in 0..samples {
        let mu: Vec<FieldElement> = (0..n)
            .map(|_| field.element(rng.gen_range(0..d) as u16).expect("in range"))
            .collect();
        let eta = random_commuting_eta(field, &mu, &mut rng);
        let canonical = field.degree() <= ENUMERATION_MAX;
        if let Ok(curve) = build_curve(field, mu, eta, canonical) {
            seen.entry(curve.points.clone()).or_insert(curve);
        }
    }
    seen.into_values().collect()
}

#[derive(Clone, Debug)]
pub struct Bundle {
    label: String,
    table_label: Option<String>,
    curves: Vec<Curve>,
}

#[derive(Serialize)]
pub struct BundleJson {
    pub curves: Vec<CurveJson>,
    pub table_label: Option<String>,
}

impl Bundle {
    /// Display label: the matched table name at n = 2, positional otherwise.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn table_label(&self) -> Option<&str> {
        self.table_label.as_deref()
    }

    /// Curves in report order (row 1 first).
    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn to_json(&self) -> BundleJson {
        BundleJson {
            curves: self.curves.iter().map(|c| c.to_json()).collect(),
            table_label: self.table_label.clone(),
        }
    }
}

/// Structural signature (class, parameter) used for report ordering and for
/// naming curves: exceptional curves carry their nonzero alpha value, graphs
/// their linear coefficient (two-qubit case), rays their slope with the
/// vertical axis assigned the out-of-range value d.
pub fn curve_signature(field: &Field, curve: &Curve) -> (CurveClass, u16) {
    let kind = curve.kind();
    let n2 = field.degree() == 2;
    match kind.class {
        CurveClass::Exceptional => {
            let p = curve
                .nonzero_points()
                .map(|p| p.alpha.val())
                .filter(|v| *v != 0)
                .min()
                .unwrap_or(0);
            (CurveClass::Exceptional, p)
        }
        CurveClass::RegularAlpha => {
            let c = if n2 {
                curve
                    .points()
                    .iter()
                    .find(|p| p.alpha.val() == 1)
                    .map(|p| p.beta.val() ^ 1)
                    .unwrap_or(0)
            } else {
                0
            };
            (CurveClass::RegularAlpha, c)
        }
        CurveClass::RegularBeta => {
            let c = if n2 {
                curve
                    .points()
                    .iter()
                    .find(|p| p.beta.val() == 1)
                    .map(|p| p.alpha.val() ^ 1)
                    .unwrap_or(0)
            } else {
                0
            };
            (CurveClass::RegularBeta, c)
        }
        CurveClass::Ray => {
            let p = curve.nonzero_points().next().expect("nonsingular");
            if p.alpha.is_zero() {
                (CurveClass::Ray, field.order() as u16)
            } else {
                let slope = field.mul(p.beta, field.inv(p.alpha).expect("nonzero"));
                (CurveClass::Ray, slope.val())
            }
        }
    }
}

// Report-order sort key: exceptional curves first, then graphs over alpha,
// graphs over beta, and rays by slope with the vertical axis last.
fn report_key(field: &Field, curve: &Curve) -> (u8, u16, Vec<Point>) {
    let (class, param) = curve_signature(field, curve);
    let rank = match class {
        CurveClass::Exceptional => 0,
        CurveClass::RegularAlpha => 1,
        CurveClass::RegularBeta => 2,
        CurveClass::Ray => 3,
    };
    (rank, param, curve.points.clone())
}

fn sort_into_report_order(field: &Field, curves: &mut [Curve]) {
    curves.sort_by_key(|c| report_key(field, c));
}

// Matches a complete GF(4) bundle to its conventional table name by structure:
// the all-ray bundle, the two graph families, and the three mixed bundles told
// apart by which exceptional curves they contain.
fn gf4_table_label(curves: &[Curve]) -> Option<String> {
    let count = |class: CurveClass| curves.iter().filter(|c| c.kind().class == class).count();
    if count(CurveClass::Ray) == 5 {
        return Some("table1".into());
    }
    if count(CurveClass::RegularAlpha) == 4 {
        return Some("table2".into());
    }
    if count(CurveClass::RegularBeta) == 3 && count(CurveClass::RegularAlpha) == 1 {
        return Some("table3".into());
    }
    let mut mus: Vec<u16> = curves
        .iter()
        .filter(|c| c.kind().class == CurveClass::Exceptional)
        .map(|c| {
            c.nonzero_points()
                .map(|p| p.alpha.val())
                .find(|v| *v != 0)
                .unwrap_or(0)
        })
        .collect();
    mus.sort_unstable();
    match mus.as_slice() {
        [1, 3] => Some("table4".into()),
        [1, 2] => Some("table5".into()),
        [2, 3] => Some("table6".into()),
        _ => None,
    }
}

/// Checks that the curves form a bundle: d + 1 of them, pairwise intersecting
/// only at the origin, jointly covering every nonzero point once.
pub fn validate_bundle(field: &Field, curves: &[Curve]) -> Result<(), Error> {
    let d = field.order() as usize;
    if curves.len() != d + 1 {
        return Err(Error::Internal(format!(
            "bundle has {} curves, expected {}",
            curves.len(),
            d + 1
        )));
    }
    let mut covered = vec![false; d * d];
    for (i, a) in curves.iter().enumerate() {
        for b in &curves[i + 1..] {
            if !intersect_only_at_origin(a, b) {
                return Err(Error::Internal("bundle curves overlap".into()));
            }
        }
        for p in a.nonzero_points() {
            covered[p.code(field) as usize] = true;
        }
    }
    if covered.iter().skip(1).filter(|c| **c).count() != d * d - 1 {
        return Err(Error::Internal("bundle does not cover the grid".into()));
    }
    Ok(())
}

/// All bundles over the census, via exact cover of the nonzero grid points.
pub fn enumerate_bundles(field: &Field) -> Result<Vec<Bundle>, Error> {
    let census = enumerate_structures(field)?;
    let d = field.order() as usize;
    let bits = d * d - 1;
    let full: u64 = if bits == 64 { !0 } else { (1u64 << bits) - 1 };
    let masks: Vec<u64> = census
        .iter()
        .map(|c| {
            c.nonzero_points()
                .fold(0u64, |m, p| m | 1 << (p.code(field) - 1))
        })
        .collect();
    // For each point, the curves through it, for first-uncovered branching.
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); bits];
    for (ci, mask) in masks.iter().enumerate() {
        for (b, bucket) in through.iter_mut().enumerate() {
            if mask >> b & 1 != 0 {
                bucket.push(ci);
            }
        }
    }
    let mut solutions: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn cover(
        covered: u64,
        full: u64,
        masks: &[u64],
        through: &[Vec<usize>],
        stack: &mut Vec<usize>,
        solutions: &mut Vec<Vec<usize>>,
    ) {
        if covered == full {
            solutions.push(stack.clone());
            return;
        }
        let next = (!covered & full).trailing_zeros() as usize;
        for &ci in &through[next] {
            if masks[ci] & covered == 0 {
                stack.push(ci);
                cover(covered | masks[ci], full, masks, through, stack, solutions);
                stack.pop();
            }
        }
    }
    cover(0, full, &masks, &through, &mut stack, &mut solutions);

    for sol in solutions.iter_mut() {
        sol.sort_unstable();
    }
    solutions.sort();

    let mut bundles: Vec<Bundle> = solutions
        .into_iter()
        .map(|sol| {
            let mut curves: Vec<Curve> = sol.into_iter().map(|i| census[i].clone()).collect();
            sort_into_report_order(field, &mut curves);
            let table_label = if field.degree() == 2 {
                gf4_table_label(&curves)
            } else {
                None
            };
            Bundle {
                label: String::new(),
                table_label,
                curves,
            }
        })
        .collect();
    if field.degree() == 2 {
        bundles.sort_by_key(|b| b.table_label.clone());
    }
    for (i, b) in bundles.iter_mut().enumerate() {
        b.label = match &b.table_label {
            Some(t) => t.clone(),
            None => format!("bundle{}", i + 1),
        };
        validate_bundle(field, &b.curves)?;
    }
    Ok(bundles)
}

fn polynomial_string(field: &Field, coeffs: &[FieldElement], var: &str) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| {
            let var_part = if m == 0 {
                var.to_string()
            } else {
                format!("{var}^{}", 1u32 << m)
            };
            if c.val() == 1 {
                var_part
            } else {
                format!("{}*{}", field.display(*c), var_part)
            }
        })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Human-readable equation. Rays and two-qubit graphs get explicit closed
/// forms; everything else is rendered parametrically in kappa (printed `k`).
pub fn equation_string(field: &Field, curve: &Curve) -> String {
    let kind = curve.kind();
    match kind.class {
        CurveClass::Ray => {
            let p = curve.nonzero_points().next().expect("nonsingular");
            if p.alpha.is_zero() {
                return "alpha = 0".to_string();
            }
            let slope = field.mul(p.beta, field.inv(p.alpha).expect("nonzero"));
            if slope.is_zero() {
                "beta = 0".to_string()
            } else if slope.val() == 1 {
                "beta = alpha".to_string()
            } else {
                format!("beta = {}*alpha", field.display(slope))
            }
        }
        CurveClass::RegularAlpha if field.degree() == 2 => {
            let c = curve
                .points()
                .iter()
                .find(|p| p.alpha.val() == 1)
                .map(|p| p.beta.val() ^ 1)
                .expect("alpha takes every value");
            match c {
                0 => "beta = alpha^2".to_string(),
                1 => "beta = alpha + alpha^2".to_string(),
                v => format!(
                    "beta = {}*alpha + alpha^2",
                    field.display(field.element(v).expect("in range"))
                ),
            }
        }
        CurveClass::RegularBeta if field.degree() == 2 => {
            let c = curve
                .points()
                .iter()
                .find(|p| p.beta.val() == 1)
                .map(|p| p.alpha.val() ^ 1)
                .expect("beta takes every value");
            match c {
                0 => "alpha = beta^2".to_string(),
                1 => "alpha = beta + beta^2".to_string(),
                v => format!(
                    "alpha = {}*beta + beta^2",
                    field.display(field.element(v).expect("in range"))
                ),
            }
        }
        _ => format!(
            "alpha = {}, beta = {}",
            polynomial_string(field, curve.mu(), "k"),
            polynomial_string(field, curve.eta(), "k")
        ),
    }
}

/// Forms a bundle from bare curves, sorting them into report order and
/// matching table labels where they apply; `fallback` names the bundle when
/// no table matches.
pub fn assemble_bundle(
    field: &Field,
    mut curves: Vec<Curve>,
    fallback: String,
) -> Result<Bundle, Error> {
    sort_into_report_order(field, &mut curves);
    validate_bundle(field, &curves)?;
    let table_label = if field.degree() == 2 {
        gf4_table_label(&curves)
    } else {
        None
    };
    let label = table_label.clone().unwrap_or(fallback);
    Ok(Bundle {
        label,
        table_label,
        curves,
    })
}

/// Direction along which parallel copies of the curve tile the grid: the
/// lexicographically least nonzero point whose ray meets the curve only at
/// the origin. For every curve that is a graph over alpha this is (0, 1),
/// i.e. the plain beta-shift; the vertical axis gets (1, 0); curves with a
/// degenerate alpha coordinate need a genuinely transverse direction.
pub fn striation_direction(field: &Field, curve: &Curve) -> Point {
    let d = field.order();
    for a in 0..d as u16 {
        for b in 0..d as u16 {
            if a == 0 && b == 0 {
                continue;
            }
            let v = Point::new(field.element(a).unwrap(), field.element(b).unwrap());
            let disjoint = field.elements().filter(|c| !c.is_zero()).all(|c| {
                let q = Point::new(field.mul(c, v.alpha), field.mul(c, v.beta));
                !curve.contains(&q)
            });
            if disjoint {
                return v;
            }
        }
    }
    unreachable!("a curve meets at most d-1 of the d+1 rays");
}

/// The lambda-th parallel copy of the curve: points shifted by lambda times
/// the striation direction. lambda = 0 returns the curve itself; the d copies
/// partition the d x d grid.
pub fn striation(field: &Field, curve: &Curve, lambda: FieldElement) -> Vec<Point> {
    let v = striation_direction(field, curve);
    let shift = Point::new(field.mul(lambda, v.alpha), field.mul(lambda, v.beta));
    let mut pts: Vec<Point> = curve
        .points()
        .iter()
        .map(|p| {
            Point::new(
                field.add(p.alpha, shift.alpha),
                field.add(p.beta, shift.beta),
            )
        })
        .collect();
    pts.sort();
    pts
}
