//! Constructors for the ring families under study: determinantal rings
//! k[X]/I_{r+1}(X) with their row/column minor primes, trivial extensions
//! B ⋉ B^q, quotients by powers of regular sequences, and composite chains
//! of such steps. Also the base-change utilities (transport along variable
//! extension, rebase along surjection) that move modules between the rings
//! of a chain.

use crate::algebra::{parse_polynomial, FieldKind, MonomialOrder, PolyRing, Polynomial};
use crate::divisor::{reflexive_power, FractionalIdeal};
use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::homalg::{ext_module, FPModule, QuotientRing};
use std::sync::Arc;

/// Determinant of a square matrix of polynomials by Laplace expansion
/// along the first row.
pub fn poly_det(rows: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = rows.len();
    if n == 0 {
        return Err(AlgebraError::Parameter(
            "determinant of an empty matrix is not defined here".into(),
        ));
    }
    if rows.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::Parameter("matrix is not square".into()));
    }
    if n == 1 {
        return Ok(rows[0][0].clone());
    }
    let ring = rows[0][0].ring().clone();
    let mut acc = ring.zero();
    for (j, pivot) in rows[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = pivot.mul(&poly_det(&minor)?);
        acc = if j % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    Ok(acc)
}

/// Lexicographically ordered k-subsets of 0..n.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All t-by-t minors of a rectangular polynomial matrix, ordered by the
/// row-subset then column-subset index tuples.
pub fn minors_ideal(matrix: &[Vec<Polynomial>], t: usize) -> Result<Vec<Polynomial>> {
    let rows = matrix.len();
    let cols = if rows == 0 { 0 } else { matrix[0].len() };
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(AlgebraError::Parameter("ragged matrix".into()));
    }
    if t == 0 || t > rows.min(cols) {
        return Err(AlgebraError::Parameter(format!(
            "minor size {t} out of range for a {rows}x{cols} matrix"
        )));
    }
    let mut out = Vec::new();
    for rsel in subsets(rows, t) {
        for csel in subsets(cols, t) {
            let sub: Vec<Vec<Polynomial>> = rsel
                .iter()
                .map(|&i| csel.iter().map(|&j| matrix[i][j].clone()).collect())
                .collect();
            out.push(poly_det(&sub)?);
        }
    }
    Ok(out)
}

/// The ring k[X]/I_{r+1}(X) for a generic m-by-n matrix X, together with
/// the two distinguished height-one primes generated by the r-minors of
/// the first r rows (resp. columns). The divisor class group is infinite
/// cyclic on the row prime, and the canonical module is its (m-n)-th
/// reflexive power once m >= n; the builder transposes to ensure that.
pub struct DetRing {
    ring: QuotientRing,
    m: usize,
    n: usize,
    r: usize,
    transposed: bool,
    p_gens: Vec<Polynomial>,
    q_gens: Vec<Polynomial>,
}

impl DetRing {
    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// Row count after the m >= n normalization.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Minors of size r+1 are killed.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn transposed(&self) -> bool {
        self.transposed
    }

    /// Krull dimension (m+n-r)r, verified against the engine at build time.
    pub fn dimension(&self) -> usize {
        (self.m + self.n - self.r) * self.r
    }

    /// Codimension mn - r(m+n-r) in the ambient polynomial ring.
    pub fn grade(&self) -> usize {
        self.m * self.n - self.dimension()
    }

    /// Exponent of the row prime giving the canonical module.
    pub fn canonical_exponent(&self) -> i64 {
        (self.m - self.n) as i64
    }

    pub fn is_gorenstein_expected(&self) -> bool {
        self.r == 0 || self.m == self.n
    }

    /// Generators of the row prime (r-minors of the first r rows); the
    /// unit ideal when r = 0.
    pub fn p_generators(&self) -> &[Polynomial] {
        &self.p_gens
    }

    pub fn q_generators(&self) -> &[Polynomial] {
        &self.q_gens
    }

    pub fn row_prime(&self) -> Result<FractionalIdeal> {
        FractionalIdeal::from_ideal(self.ring.clone(), self.p_gens.clone())
    }

    pub fn col_prime(&self) -> Result<FractionalIdeal> {
        FractionalIdeal::from_ideal(self.ring.clone(), self.q_gens.clone())
    }

    /// The reflexive power p^(c), using the column prime for negative c.
    pub fn power_class(&self, c: i64) -> Result<FractionalIdeal> {
        reflexive_power(&self.row_prime()?, c)
    }

    /// Canonical module as a fractional ideal: p^(m-n).
    pub fn canonical_module(&self) -> Result<FractionalIdeal> {
        self.power_class(self.canonical_exponent())
    }

    /// The matrix entry x_{ij} (0-based, post-transposition layout).
    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        self.ring.ambient().var_poly(i * self.n + j)
    }

    /// Ext^grade of (R, S) over the ambient polynomial ring S, re-based to
    /// an R-module: the canonical-module construction from a finite free
    /// resolution. Its class in the divisor group is m-n.
    pub fn ext_twist_dagger(&self) -> Result<FPModule> {
        let ambient = QuotientRing::polynomial_ring(self.ring.ambient().clone());
        let defining = self.ring.defining_ideal().generators().to_vec();
        let r_as_module = if defining.is_empty() {
            ambient.ring_module()
        } else {
            ambient.cyclic_module(defining)?
        };
        let e = ext_module(self.grade(), &r_as_module, &ambient.ring_module())?;
        rebase_module(&e.minimal(), &self.ring)
    }
}

/// Builds k[X]/I_{r+1}(X), transposing so that rows >= columns. With r = 0
/// the ideal of 1-minors is every entry, so the ring degenerates to the
/// coefficient field presented on mn nilpotent-free zero variables.
pub fn build_det_ring(field: FieldKind, m: usize, n: usize, r: usize) -> Result<DetRing> {
    if m == 0 || n == 0 {
        return Err(AlgebraError::Parameter(
            "matrix dimensions must be positive".into(),
        ));
    }
    if r >= m.min(n) {
        return Err(AlgebraError::Parameter(format!(
            "minor bound r = {r} must satisfy r < min(m, n) = {}",
            m.min(n)
        )));
    }
    let (m, n, transposed) = if m >= n { (m, n, false) } else { (n, m, true) };
    let wide = m > 9 || n > 9;
    let mut names = Vec::with_capacity(m * n);
    for i in 1..=m {
        for j in 1..=n {
            names.push(if wide {
                format!("x{i}_{j}")
            } else {
                format!("x{i}{j}")
            });
        }
    }
    let ambient = PolyRing::new(field, names, MonomialOrder::GrevLex)?;
    let matrix: Vec<Vec<Polynomial>> = (0..m)
        .map(|i| (0..n).map(|j| ambient.var_poly(i * n + j)).collect())
        .collect();
    let gens = if r == 0 {
        matrix.iter().flatten().cloned().collect()
    } else {
        minors_ideal(&matrix, r + 1)?
    };
    let ring = QuotientRing::new(ambient.clone(), gens)?;
    let expected_dim = (m + n - r) * r;
    assert_eq!(
        ring.dim(),
        expected_dim,
        "determinantal dimension disagrees with (m+n-r)r"
    );
    let (p_gens, q_gens) = if r == 0 {
        (vec![ambient.one()], vec![ambient.one()])
    } else {
        let top: Vec<Vec<Polynomial>> = matrix[..r].to_vec();
        let left: Vec<Vec<Polynomial>> = matrix.iter().map(|row| row[..r].to_vec()).collect();
        (minors_ideal(&top, r)?, minors_ideal(&left, r)?)
    };
    Ok(DetRing {
        ring,
        m,
        n,
        r,
        transposed,
        p_gens,
        q_gens,
    })
}

/// Carries a polynomial into a ring that extends its ring by appended
/// variables (same field, same leading variable names).
pub fn append_transport(p: &Polynomial, target: &Arc<PolyRing>) -> Polynomial {
    let src = p.ring();
    debug_assert!(target.nvars() >= src.nvars());
    debug_assert!(src
        .vars()
        .iter()
        .zip(target.vars())
        .all(|(a, b)| a == b));
    let extra = target.nvars() - src.nvars();
    if extra == 0 && Arc::ptr_eq(src, target) {
        return p.clone();
    }
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| (m.append_vars(extra), c.clone()))
        .collect();
    target.from_terms(terms)
}

/// Re-presents a module over a further quotient of the same ambient ring.
/// This computes M ⊗ (target); when the target's extra relations already
/// annihilate M (as for Hom/Ext twists along the surjection) it is M
/// itself with its induced structure.
pub fn rebase_module(c: &FPModule, target: &QuotientRing) -> Result<FPModule> {
    if !Arc::ptr_eq(c.ring().ambient(), target.ambient()) {
        return Err(AlgebraError::RingMismatch);
    }
    let rels: Vec<Vec<Polynomial>> = c
        .relations()
        .iter()
        .map(|v| v.comps().to_vec())
        .collect();
    FPModule::new(target.clone(), c.gen_degrees().to_vec(), rels)
}

/// Carries a module into a trivial extension (or any quotient whose
/// ambient appends variables to the source's): base change along the
/// inclusion, i.e. same presentation read over the larger ring.
pub fn transport_module(c: &FPModule, target: &QuotientRing) -> Result<FPModule> {
    let src_ambient = c.ring().ambient();
    let dst_ambient = target.ambient();
    if dst_ambient.nvars() < src_ambient.nvars()
        || src_ambient
            .vars()
            .iter()
            .zip(dst_ambient.vars())
            .any(|(a, b)| a != b)
    {
        return Err(AlgebraError::RingMismatch);
    }
    let rels: Vec<Vec<Polynomial>> = c
        .relations()
        .iter()
        .map(|v| {
            v.comps()
                .iter()
                .map(|p| append_transport(p, dst_ambient))
                .collect()
        })
        .collect();
    FPModule::new(target.clone(), c.gen_degrees().to_vec(), rels)
}

/// The trivial extension B ⋉ B^q presented as B[Z1..Zq]/(Z_i Z_j), with
/// the handle needed to address the new variables afterwards.
pub struct TrivialExtension {
    base: QuotientRing,
    ring: QuotientRing,
    z_start: usize,
    q: usize,
}

impl TrivialExtension {
    pub fn base(&self) -> &QuotientRing {
        &self.base
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// The k-th adjoined variable (0-based) as an element of the extension.
    pub fn z_poly(&self, k: usize) -> Polynomial {
        self.ring.ambient().var_poly(self.z_start + k)
    }
}

pub fn build_trivial_extension(base: &QuotientRing, q: usize) -> Result<TrivialExtension> {
    if q == 0 {
        return Err(AlgebraError::Parameter(
            "trivial extension needs at least one module generator".into(),
        ));
    }
    let old = base.ambient();
    // Choose fresh names: z1..zq, with extra z prefixes on collision.
    let mut prefix = "z".to_string();
    let names: Vec<String> = loop {
        let cand: Vec<String> = (1..=q).map(|i| format!("{prefix}{i}")).collect();
        if cand.iter().all(|nm| old.var_index(nm).is_none()) {
            break cand;
        }
        prefix.push('z');
    };
    let ambient = old.with_appended_vars(&names)?;
    let mut gens: Vec<Polynomial> = base
        .defining_ideal()
        .generators()
        .iter()
        .map(|g| append_transport(g, &ambient))
        .collect();
    let z_start = old.nvars();
    for i in 0..q {
        for j in i..q {
            gens.push(
                ambient
                    .var_poly(z_start + i)
                    .mul(&ambient.var_poly(z_start + j)),
            );
        }
    }
    let ring = QuotientRing::new(ambient, gens)?;
    Ok(TrivialExtension {
        base: base.clone(),
        ring,
        z_start,
        q,
    })
}

/// Quotient by a sequence of homogeneous elements of positive degree,
/// certifying at each step that the next element is a nonzerodivisor on
/// the partial quotient. Failure reports the 1-based offending position.
pub fn quotient_by_regular_sequence(
    ring: &QuotientRing,
    ys: &[Polynomial],
) -> Result<QuotientRing> {
    let mut current = ring.clone();
    for (idx, y) in ys.iter().enumerate() {
        if !y.is_homogeneous() || y.degree().unwrap_or(0) < 1 {
            return Err(AlgebraError::Parameter(format!(
                "sequence element {} must be homogeneous of positive degree",
                idx + 1
            )));
        }
        if !current.is_nonzerodivisor(y)? {
            return Err(AlgebraError::RegularityFailure { position: idx + 1 });
        }
        let mut gens = current.defining_ideal().generators().to_vec();
        gens.push(y.clone());
        current = QuotientRing::new(ring.ambient().clone(), gens)?;
    }
    Ok(current)
}

/// A/(y1..yq)^m for a verified regular sequence y. The ambient ring is
/// unchanged, so modules re-base along the surjection without transport.
pub fn build_power_quotient(
    base: &QuotientRing,
    ys: &[Polynomial],
    exponent: usize,
) -> Result<QuotientRing> {
    if exponent == 0 || ys.is_empty() {
        return Err(AlgebraError::Parameter(
            "power quotient needs a nonempty sequence and a positive exponent".into(),
        ));
    }
    // Certify regularity before quotienting.
    quotient_by_regular_sequence(base, ys)?;
    let seq_ideal = Ideal::new(base.ambient().clone(), ys.to_vec());
    let mut gens = base.defining_ideal().generators().to_vec();
    gens.extend(seq_ideal.power(exponent as u32).generators().iter().cloned());
    QuotientRing::new(base.ambient().clone(), gens)
}

/// One step of a chain construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainStepSpec {
    /// Start from a determinantal ring (first step only).
    DetBlock { m: usize, n: usize, r: usize },
    /// S_l = S_{l-1} ⋉ S_{l-1}^q.
    TrivialExt { q: usize },
    /// S_l = S_{l-1}/(y)^m with y regular; elements given in the
    /// polynomial grammar against the current ring.
    PowerQuotient { ys: Vec<String>, exponent: usize },
}

/// A realized chain step: the ring it produced plus the data the branch
/// maps need.
pub struct ChainStep {
    pub spec: ChainStepSpec,
    pub ring: QuotientRing,
    /// Whether the classification doubles at this step (both the exponent
    /// and the number of adjoined directions exceed one).
    pub branching: bool,
    /// For power quotients: sequence reps in the previous ring and the
    /// Ext degree used by the twist branch.
    pub ys: Vec<Polynomial>,
    pub exponent: usize,
    /// For trivial extensions: the handle with the adjoined variables.
    pub extension: Option<TrivialExtension>,
}

pub struct Chain {
    pub base: QuotientRing,
    pub det: Option<DetRing>,
    pub steps: Vec<ChainStep>,
}

impl Chain {
    pub fn final_ring(&self) -> &QuotientRing {
        self.steps.last().map(|s| &s.ring).unwrap_or(&self.base)
    }

    /// Number of branching steps (each contributes a factor of 2 to the
    /// predicted count of semidualizing classes).
    pub fn branching_steps(&self) -> usize {
        self.steps.iter().filter(|s| s.branching).count()
    }

    /// Predicted number of semidualizing classes: the base contributes 2
    /// for a non-Gorenstein determinantal block, 1 otherwise, and each
    /// branching step doubles.
    pub fn predicted_classes(&self) -> u64 {
        let base = match &self.det {
            Some(d) if !d.is_gorenstein_expected() => 2u64,
            _ => 1u64,
        };
        base << self.branching_steps()
    }
}

/// Builds a chain over the given field. `base_vars` names the starting
/// polynomial ring (empty for the field itself); a leading determinantal
/// block replaces it.
pub fn build_chain(
    field: FieldKind,
    base_vars: &[String],
    specs: &[ChainStepSpec],
) -> Result<Chain> {
    let mut det = None;
    let rest;
    let start = if let Some(ChainStepSpec::DetBlock { m, n, r }) = specs.first() {
        if !base_vars.is_empty() {
            return Err(AlgebraError::Parameter(
                "base variables and a determinantal block are mutually exclusive".into(),
            ));
        }
        let d = build_det_ring(field.clone(), *m, *n, *r)?;
        let ring = d.ring().clone();
        det = Some(d);
        rest = &specs[1..];
        ring
    } else {
        rest = specs;
        make_base(&field, base_vars)?
    };
    let mut steps: Vec<ChainStep> = Vec::new();
    let mut current = start.clone();
    for spec in rest {
        match spec {
            ChainStepSpec::DetBlock { .. } => {
                return Err(AlgebraError::Parameter(
                    "a determinantal block may only start a chain".into(),
                ));
            }
            ChainStepSpec::TrivialExt { q } => {
                let ext = build_trivial_extension(&current, *q)?;
                current = ext.ring().clone();
                steps.push(ChainStep {
                    spec: spec.clone(),
                    ring: current.clone(),
                    branching: *q > 1,
                    ys: Vec::new(),
                    exponent: 2,
                    extension: Some(ext),
                });
            }
            ChainStepSpec::PowerQuotient { ys, exponent } => {
                let parsed: Vec<Polynomial> = ys
                    .iter()
                    .map(|s| parse_polynomial(current.ambient(), s))
                    .collect::<Result<_>>()?;
                let ring = build_power_quotient(&current, &parsed, *exponent)?;
                current = ring.clone();
                steps.push(ChainStep {
                    spec: spec.clone(),
                    ring,
                    branching: *exponent > 1 && parsed.len() > 1,
                    ys: parsed,
                    exponent: *exponent,
                    extension: None,
                });
            }
        }
    }
    Ok(Chain {
        base: start,
        det,
        steps,
    })
}

fn make_base(field: &FieldKind, base_vars: &[String]) -> Result<QuotientRing> {
    let ring = PolyRing::new(field.clone(), base_vars.to_vec(), MonomialOrder::GrevLex)?;
    Ok(QuotientRing::polynomial_ring(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_polynomial;

    fn fp() -> FieldKind {
        FieldKind::default_prime()
    }

    #[test]
    fn minor_counts_and_determinant() {
        let ring = PolyRing::new(
            fp(),
            (1..=6).map(|i| format!("a{i}")).collect(),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let mat: Vec<Vec<Polynomial>> = (0..3)
            .map(|i| (0..2).map(|j| ring.var_poly(i * 2 + j)).collect())
            .collect();
        let ones = minors_ideal(&mat, 1).unwrap();
        assert_eq!(ones.len(), 6);
        let twos = minors_ideal(&mat, 2).unwrap();
        assert_eq!(twos.len(), 3);
        // First 2-minor is a1*a4 - a2*a3 (rows {0,1}, cols {0,1}).
        let expect = parse_polynomial(&ring, "a1*a4 - a2*a3").unwrap();
        assert_eq!(twos[0], expect);
        assert!(minors_ideal(&mat, 3).is_err());
    }

    #[test]
    fn det_ring_3_2_1_shape() {
        let d = build_det_ring(fp(), 3, 2, 1).unwrap();
        assert_eq!(d.dimension(), 4);
        assert_eq!(d.grade(), 2);
        assert_eq!(d.canonical_exponent(), 1);
        assert!(!d.is_gorenstein_expected());
        assert!(!d.ring().is_gorenstein());
        assert_eq!(d.ring().dim(), 4);
        assert_eq!(d.ring().depth(), 4);
        // Row prime (x11, x12); column prime (x11, x21, x31).
        let pg: Vec<String> = d.p_generators().iter().map(|p| p.to_string()).collect();
        assert_eq!(pg, vec!["x11", "x12"]);
        let qg: Vec<String> = d.q_generators().iter().map(|p| p.to_string()).collect();
        assert_eq!(qg, vec!["x11", "x21", "x31"]);
        // Hilbert series (1 + 2t)/(1 - t)^4.
        let h = d.ring().hilbert_series();
        assert_eq!(h.dimension(), 4);
        assert_eq!(h.multiplicity(), 3);
        assert_eq!(format!("{h}"), "(1 + 2*t)/(1 - t)^4");
    }

    #[test]
    fn det_ring_transposes_to_rows_at_least_cols() {
        let d = build_det_ring(fp(), 2, 3, 1).unwrap();
        assert!(d.transposed());
        assert_eq!((d.m(), d.n()), (3, 2));
        assert_eq!(d.dimension(), 4);
    }

    #[test]
    fn det_ring_2_2_1_is_gorenstein_hypersurface() {
        let d = build_det_ring(fp(), 2, 2, 1).unwrap();
        assert_eq!(d.dimension(), 3);
        assert_eq!(d.grade(), 1);
        assert!(d.is_gorenstein_expected());
        assert!(d.ring().is_gorenstein());
        assert_eq!(d.ring().defining_ideal().generators().len(), 1);
    }

    #[test]
    fn det_ring_r_zero_degenerates() {
        let d = build_det_ring(fp(), 2, 3, 0).unwrap();
        assert_eq!(d.dimension(), 0);
        assert_eq!(d.grade(), 6);
        assert!(d.is_gorenstein_expected());
        assert!(d.ring().is_gorenstein());
        assert_eq!(d.ring().dim(), 0);
        // The row prime degenerates to the unit ideal.
        assert!(d.row_prime().unwrap().is_principal().unwrap());
    }

    #[test]
    fn det_parameter_validation() {
        assert!(build_det_ring(fp(), 2, 2, 2).is_err());
        assert!(build_det_ring(fp(), 0, 2, 0).is_err());
    }

    #[test]
    fn canonical_module_class_on_segre() {
        let d = build_det_ring(fp(), 3, 2, 1).unwrap();
        let omega = d.canonical_module().unwrap();
        let p = d.row_prime().unwrap();
        assert!(omega.class_equals(&p).unwrap());
        assert!(!omega.is_principal().unwrap());
        // The square ring's canonical module is free.
        let d22 = build_det_ring(fp(), 2, 2, 1).unwrap();
        let omega22 = d22.canonical_module().unwrap();
        assert!(omega22.is_principal().unwrap());
    }

    #[test]
    fn trivial_extension_shapes() {
        let k = QuotientRing::polynomial_ring(
            PolyRing::new(fp(), vec![], MonomialOrder::GrevLex).unwrap(),
        );
        let e1 = build_trivial_extension(&k, 1).unwrap();
        assert_eq!(e1.ring().dim(), 0);
        assert!(e1.ring().is_gorenstein());
        let h1 = e1.ring().hilbert_series();
        assert_eq!(h1.value_at(0) + h1.value_at(1), 2);
        let e2 = build_trivial_extension(&k, 2).unwrap();
        assert_eq!(e2.ring().dim(), 0);
        assert!(!e2.ring().is_gorenstein());
        // Length 3: basis 1, z1, z2.
        let h2 = e2.ring().hilbert_series();
        assert_eq!((0..4).map(|d| h2.value_at(d)).sum::<i64>(), 3);
    }

    #[test]
    fn trivial_extension_avoids_name_collisions() {
        let base_ring =
            PolyRing::new(fp(), vec!["z1".into(), "x".into()], MonomialOrder::GrevLex).unwrap();
        let base = QuotientRing::polynomial_ring(base_ring);
        let e = build_trivial_extension(&base, 2).unwrap();
        let names = e.ring().ambient().vars().to_vec();
        assert_eq!(names, vec!["z1", "x", "zz1", "zz2"]);
    }

    #[test]
    fn regular_sequence_quotients() {
        let ring = PolyRing::new(
            fp(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let x = parse_polynomial(&ring, "x").unwrap();
        let y = parse_polynomial(&ring, "y").unwrap();
        let quotient = quotient_by_regular_sequence(&qr, &[x.clone(), y.clone()]).unwrap();
        assert_eq!(quotient.dim(), 0);
        // x is a zerodivisor on k[x,y]/(xy).
        let xy = parse_polynomial(&ring, "x*y").unwrap();
        let modxy = QuotientRing::new(ring.clone(), vec![xy]).unwrap();
        match quotient_by_regular_sequence(&modxy, &[x.clone()]) {
            Err(AlgebraError::RegularityFailure { position }) => assert_eq!(position, 1),
            other => panic!("expected regularity failure, got {other:?}"),
        }
    }

    #[test]
    fn power_quotient_square_of_maximal_ideal() {
        let ring = PolyRing::new(
            fp(),
            vec!["y1".into(), "y2".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let y1 = parse_polynomial(&ring, "y1").unwrap();
        let y2 = parse_polynomial(&ring, "y2").unwrap();
        let b = build_power_quotient(&qr, &[y1, y2], 2).unwrap();
        assert_eq!(b.dim(), 0);
        assert!(!b.is_gorenstein());
        let h = b.hilbert_series();
        assert_eq!((0..3).map(|d| h.value_at(d)).sum::<i64>(), 3);
    }

    #[test]
    fn chain_over_field_and_polynomials() {
        let chain = build_chain(fp(), &[], &[ChainStepSpec::TrivialExt { q: 2 }]).unwrap();
        assert_eq!(chain.predicted_classes(), 2);
        assert_eq!(chain.final_ring().dim(), 0);
        let small = build_chain(fp(), &[], &[ChainStepSpec::TrivialExt { q: 1 }]).unwrap();
        assert_eq!(small.predicted_classes(), 1);
        let powq = build_chain(
            fp(),
            &["y1".into(), "y2".into()],
            &[ChainStepSpec::PowerQuotient {
                ys: vec!["y1".into(), "y2".into()],
                exponent: 2,
            }],
        )
        .unwrap();
        assert_eq!(powq.predicted_classes(), 2);
        let det_chain = build_chain(
            fp(),
            &[],
            &[ChainStepSpec::DetBlock { m: 3, n: 2, r: 1 }],
        )
        .unwrap();
        assert_eq!(det_chain.predicted_classes(), 2);
        // Determinantal blocks only lead.
        let bad = build_chain(
            fp(),
            &[],
            &[
                ChainStepSpec::TrivialExt { q: 1 },
                ChainStepSpec::DetBlock { m: 2, n: 2, r: 1 },
            ],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn transport_and_rebase_roundtrip() {
        let ring = PolyRing::new(
            fp(),
            vec!["x".into(), "y".into()],
            MonomialOrder::GrevLex,
        )
        .unwrap();
        let qr = QuotientRing::polynomial_ring(ring.clone());
        let ext = build_trivial_extension(&qr, 1).unwrap();
        let f = parse_polynomial(&ring, "x^2 + 3*x*y").unwrap();
        let g = append_transport(&f, ext.ring().ambient());
        assert_eq!(g.to_string(), "x^2 + 3*x*y");
        assert_eq!(g.ring().nvars(), 3);
        // Rebase R/(x) from k[x,y] to k[x,y]/(y^2): tensor gives
        // k[x,y]/(x, y^2).
        let x = parse_polynomial(&ring, "x").unwrap();
        let y2 = parse_polynomial(&ring, "y^2").unwrap();
        let m = qr.cyclic_module(vec![x]).unwrap();
        let target = QuotientRing::new(ring.clone(), vec![y2]).unwrap();
        let r = rebase_module(&m, &target).unwrap();
        assert_eq!(r.presented_gens(), 1);
        assert!(!r.is_zero());
        assert_eq!(r.dim_k_at_degree(0), 1);
        assert_eq!(r.dim_k_at_degree(1), 1);
        assert_eq!(r.dim_k_at_degree(2), 0);
    }
}
