//! Builders for the ideal and resolution families under study: edge ideals,
//! Koszul complexes, the z*J family, the Engheta height-two multiplicity-two
//! forms, determinantal ideals, Northcott linkage ideals, representation by
//! minors, and mapping cones.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::ideal::Ideal;
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::resolution::{GradedFreeModule, GradedMap, Resolution};
use crate::ring::PolyRing;

/// A simple graph on vertices 0..n: no loops, no duplicate edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            if a == b {
                return Err(AlgebraError::Invalid(format!("loop at vertex {a}")));
            }
            if a >= vertices || b >= vertices {
                return Err(AlgebraError::Invalid("edge endpoint out of range".into()));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(AlgebraError::Invalid(format!("duplicate edge {e:?}")));
            }
        }
        Ok(Graph {
            vertices,
            edges: set,
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Minimal size of a vertex cover, by brute force over subsets.
    pub fn vertex_cover_number(&self) -> usize {
        for k in 0..=self.vertices {
            if subsets(self.vertices, k)
                .into_iter()
                .any(|s| self.edges.iter().all(|(a, b)| s.contains(a) || s.contains(b)))
            {
                return k;
            }
        }
        self.vertices
    }
}

fn subsets(n: usize, k: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<BTreeSet<usize>>) {
        if cur.len() == k {
            out.push(cur.iter().copied().collect());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// The edge ideal I(G) = (x_i x_j : {i,j} an edge).
pub fn edge_ideal(graph: &Graph, ring: &Arc<PolyRing>) -> Result<Ideal> {
    if ring.nvars() < graph.vertices {
        return Err(AlgebraError::Invalid(format!(
            "graph needs {} variables, ring has {}",
            graph.vertices,
            ring.nvars()
        )));
    }
    let gens = graph
        .edges
        .iter()
        .map(|&(a, b)| {
            Polynomial::monomial(
                ring.clone(),
                ring.field.one(),
                Monomial::var(a, ring.nvars()).mul(&Monomial::var(b, ring.nvars())),
            )
        })
        .collect();
    Ok(Ideal::new(ring.clone(), gens))
}

/// The six graphs of the height-two four-generator edge-ideal table, read
/// off the figure: a 4-cycle, a triangle with a pendant edge, a star with
/// one lengthened leg, a claw plus a disjoint edge, the path P5, and two
/// disjoint paths P3. All have four edges and vertex cover number two,
/// which is validated here as a guard against transcription error.
pub fn table1_graphs() -> Vec<(&'static str, Graph)> {
    let data: Vec<(&str, usize, Vec<(usize, usize)>)> = vec![
        ("i-a", 4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
        ("i-b", 4, vec![(0, 1), (1, 2), (0, 2), (2, 3)]),
        ("i-c", 5, vec![(1, 2), (2, 3), (0, 2), (3, 4)]),
        ("ii", 6, vec![(1, 2), (2, 3), (0, 2), (4, 5)]),
        ("iii", 5, vec![(0, 1), (1, 2), (2, 3), (3, 4)]),
        ("iv", 6, vec![(0, 1), (1, 2), (3, 4), (4, 5)]),
    ];
    data.into_iter()
        .map(|(label, n, edges)| {
            let g = Graph::new(n, &edges).expect("hard-coded graph");
            assert_eq!(g.edge_count(), 4, "table graphs have four edges");
            assert_eq!(g.vertex_cover_number(), 2, "table graphs have cover number two");
            (label, g)
        })
        .collect()
}

/// The Koszul complex on a sequence of nonzero homogeneous elements. Always
/// a complex; a resolution exactly when the sequence is regular.
pub fn koszul_complex(seq: &[Polynomial]) -> Result<Resolution> {
    let ring = seq
        .first()
        .map(|p| p.ring.clone())
        .ok_or_else(|| AlgebraError::Invalid("empty sequence".into()))?;
    let degrees: Vec<i64> = seq
        .iter()
        .map(|p| {
            if p.is_zero() || !p.is_homogeneous() {
                return Err(AlgebraError::Invalid(
                    "Koszul complex needs nonzero homogeneous inputs".into(),
                ));
            }
            Ok(i64::from(p.degree().unwrap()))
        })
        .collect::<Result<_>>()?;
    let k = seq.len();
    let mut modules = Vec::with_capacity(k + 1);
    let mut subsets_by_size: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k + 1);
    for size in 0..=k {
        let subs = subsets(k, size)
            .into_iter()
            .map(|s| s.into_iter().collect::<Vec<usize>>())
            .collect::<Vec<_>>();
        modules.push(GradedFreeModule {
            twists: subs
                .iter()
                .map(|s| s.iter().map(|&i| degrees[i]).sum())
                .collect(),
        });
        subsets_by_size.push(subs);
    }
    let mut maps = Vec::with_capacity(k);
    for size in 1..=k {
        let src = &subsets_by_size[size];
        let dst = &subsets_by_size[size - 1];
        let mut entries =
            vec![vec![Polynomial::zero(ring.clone()); src.len()]; dst.len()];
        for (j, s) in src.iter().enumerate() {
            for (pos, &elem) in s.iter().enumerate() {
                let mut smaller = s.clone();
                smaller.remove(pos);
                let i = dst.iter().position(|d| *d == smaller).unwrap();
                let signed = if pos % 2 == 0 {
                    seq[elem].clone()
                } else {
                    seq[elem].neg()
                };
                entries[i][j] = signed;
            }
        }
        maps.push(GradedMap::new(
            ring.clone(),
            modules[size].clone(),
            modules[size - 1].clone(),
            entries,
        )?);
    }
    Ok(Resolution {
        ring,
        modules,
        maps,
        minimal: false,
    })
}

/// The resolution of S/(z*J) for a regular sequence J of independent linear
/// forms: the Koszul complex on J with the first differential multiplied by
/// z and the tail twisted by one.
pub fn scaled_koszul(z: &Polynomial, linear_forms: &[Polynomial]) -> Result<Resolution> {
    if z.is_zero() || z.degree() != Some(1) {
        return Err(AlgebraError::Invalid("z must be a linear form".into()));
    }
    for f in linear_forms {
        if f.is_zero() || f.degree() != Some(1) {
            return Err(AlgebraError::Invalid(
                "J must consist of linear forms".into(),
            ));
        }
    }
    if linear_rank(linear_forms) != linear_forms.len() {
        return Err(AlgebraError::Invalid(
            "J must be independent linear forms".into(),
        ));
    }
    let mut res = koszul_complex(linear_forms)?;
    for i in 1..res.modules.len() {
        for t in res.modules[i].twists.iter_mut() {
            *t += 1;
        }
    }
    for (i, map) in res.maps.iter_mut().enumerate() {
        map.source = res.modules[i + 1].clone();
        map.target = res.modules[i].clone();
        if i == 0 {
            for row in map.entries.iter_mut() {
                for e in row.iter_mut() {
                    *e = e.mul(z);
                }
            }
        }
    }
    debug_assert!(res.verify_complex());
    Ok(res)
}

/// Rank of the coefficient matrix of a list of linear forms.
pub fn linear_rank(forms: &[Polynomial]) -> usize {
    let Some(first) = forms.first() else {
        return 0;
    };
    let ring = &first.ring;
    let n = ring.nvars();
    let rows: Vec<Vec<Scalar>> = forms
        .iter()
        .map(|f| {
            (0..n)
                .map(|i| f.coefficient_of(&Monomial::var(i, n)))
                .collect()
        })
        .collect();
    Matrix::from_rows(&ring.field, rows).rank()
}

/// Matrix of linear forms (entries zero or homogeneous of degree one).
#[derive(Clone, Debug, PartialEq)]
pub struct LinearMatrix {
    pub ring: Arc<PolyRing>,
    pub entries: Vec<Vec<Polynomial>>,
}

impl LinearMatrix {
    pub fn new(ring: Arc<PolyRing>, entries: Vec<Vec<Polynomial>>) -> Result<LinearMatrix> {
        let cols = entries.first().map_or(0, |r| r.len());
        for row in &entries {
            if row.len() != cols {
                return Err(AlgebraError::Invalid("ragged matrix".into()));
            }
            for e in row {
                if !e.is_zero() && e.degree() != Some(1) {
                    return Err(AlgebraError::Invalid(
                        "entries must be zero or linear".into(),
                    ));
                }
            }
        }
        Ok(LinearMatrix { ring, entries })
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, |r| r.len())
    }

    pub fn transpose(&self) -> LinearMatrix {
        let mut entries =
            vec![vec![Polynomial::zero(self.ring.clone()); self.rows()]; self.cols()];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                entries[j][i] = e.clone();
            }
        }
        LinearMatrix {
            ring: self.ring.clone(),
            entries,
        }
    }
}

/// All 2x2 minors of a 2xn matrix.
pub fn minors2(m: &LinearMatrix) -> Result<Ideal> {
    if m.rows() != 2 {
        return Err(AlgebraError::Invalid(
            "minors2 expects a 2-row matrix (transpose first if needed)".into(),
        ));
    }
    Ok(Ideal::new(
        m.ring.clone(),
        minors2_rows(&m.entries[0], &m.entries[1]),
    ))
}

fn minors2_rows(top: &[Polynomial], bottom: &[Polynomial]) -> Vec<Polynomial> {
    let n = top.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(top[i].mul(&bottom[j]).sub(&top[j].mul(&bottom[i])));
        }
    }
    out
}

/// The four Engheta forms of height-two multiplicity-two ideals generated
/// by g >= 4 quadrics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnghetaCase {
    /// (x, y) ∩ (z, w), g = 4.
    IaIntersection,
    /// ((x, y)^2, xz + yw), g = 4.
    IaQuadric,
    /// (a_1 x, ..., a_{g-1} x, q) with q in (a_1, ..., a_{g-1}) \ (x).
    Ib,
    /// (a_1 x, ..., a_{g-1} x, q) with q a nonzerodivisor mod (a_i x).
    Ii,
}

/// Parameters for the Engheta constructors: four independent linear forms
/// for the (i_a) cases; the a_i, x, and q for (i_b) and (ii).
#[derive(Clone, Debug)]
pub struct EnghetaParams {
    pub linear_forms: Vec<Polynomial>,
    pub quadric: Option<Polynomial>,
}

/// Builds an Engheta-form ideal, validating every membership side condition
/// and the minimal generator count.
pub fn engheta_form(
    case: EnghetaCase,
    g: usize,
    ring: &Arc<PolyRing>,
    params: &EnghetaParams,
) -> Result<Ideal> {
    let ideal = match case {
        EnghetaCase::IaIntersection | EnghetaCase::IaQuadric => {
            if g != 4 {
                return Err(AlgebraError::Invalid("cases (i_a) force g = 4".into()));
            }
            let f = &params.linear_forms;
            if f.len() != 4 || linear_rank(f) != 4 {
                return Err(AlgebraError::Invalid(
                    "need four independent linear forms".into(),
                ));
            }
            let (x, y, z, w) = (&f[0], &f[1], &f[2], &f[3]);
            match case {
                EnghetaCase::IaIntersection => Ideal::new(
                    ring.clone(),
                    vec![x.mul(z), x.mul(w), y.mul(z), y.mul(w)],
                ),
                _ => Ideal::new(
                    ring.clone(),
                    vec![
                        x.mul(x),
                        x.mul(y),
                        y.mul(y),
                        x.mul(z).add(&y.mul(w)),
                    ],
                ),
            }
        }
        EnghetaCase::Ib | EnghetaCase::Ii => {
            if g < 4 {
                return Err(AlgebraError::Invalid("need g >= 4".into()));
            }
            let forms = &params.linear_forms;
            if forms.len() != g {
                return Err(AlgebraError::Invalid(format!(
                    "need a_1..a_{} and x, got {} forms",
                    g - 1,
                    forms.len()
                )));
            }
            let (a, x) = forms.split_at(g - 1);
            if linear_rank(a) != g - 1 {
                return Err(AlgebraError::Invalid(
                    "a_1, ..., a_{g-1} must be independent".into(),
                ));
            }
            let x = &x[0];
            let q = params
                .quadric
                .as_ref()
                .ok_or_else(|| AlgebraError::Invalid("missing quadric q".into()))?;
            if q.degree() != Some(2) || !q.is_homogeneous() {
                return Err(AlgebraError::Invalid("q must be a quadric".into()));
            }
            let zj = Ideal::new(
                ring.clone(),
                a.iter().map(|ai| ai.mul(x)).collect(),
            );
            let a_ideal = Ideal::new(ring.clone(), a.to_vec());
            let x_ideal = Ideal::new(ring.clone(), vec![x.clone()]);
            match case {
                EnghetaCase::Ib => {
                    if !a_ideal.contains(q) {
                        return Err(AlgebraError::Invalid(
                            "case (i_b) needs q in (a_1, ..., a_{g-1})".into(),
                        ));
                    }
                    if x_ideal.contains(q) {
                        return Err(AlgebraError::Invalid(
                            "case (i_b) needs q outside (x)".into(),
                        ));
                    }
                }
                _ => {
                    // (ii): q must be a nonzerodivisor mod (a_1 x, ..., a_{g-1} x).
                    let colon = zj.quotient(q)?;
                    if !colon.equal(&zj) {
                        return Err(AlgebraError::Invalid(
                            "case (ii) needs q to be a nonzerodivisor mod (a_i x)".into(),
                        ));
                    }
                }
            }
            let mut gens: Vec<Polynomial> = a.iter().map(|ai| ai.mul(x)).collect();
            gens.push(q.clone());
            Ideal::new(ring.clone(), gens)
        }
    };
    let (_, count) = ideal.minimal_generators()?;
    if count != g {
        return Err(AlgebraError::Invalid(format!(
            "constructed ideal has {count} minimal generators, wanted {g}"
        )));
    }
    Ok(ideal)
}

/// The Northcott/AKM construction: C = (a1 f + b1 g, a2 f + b2 g) must be a
/// complete intersection of codimension two; I is the 2x2-minors ideal of
///   ( g  a1  a2 )
///   (-f  b1  b2 )
/// and is directly linked to (f, g) via C. Both colon identities are
/// verified before returning.
#[allow(clippy::too_many_arguments)]
pub fn northcott(
    f: &Polynomial,
    g: &Polynomial,
    a1: &Polynomial,
    a2: &Polynomial,
    b1: &Polynomial,
    b2: &Polynomial,
) -> Result<(Ideal, Ideal)> {
    let ring = f.ring.clone();
    for p in [f, g, a1, a2, b1, b2] {
        if !p.is_homogeneous() {
            return Err(AlgebraError::Invalid(
                "northcott needs homogeneous inputs".into(),
            ));
        }
    }
    let c1 = a1.mul(f).add(&b1.mul(g));
    let c2 = a2.mul(f).add(&b2.mul(g));
    let c = Ideal::new(ring.clone(), vec![c1.clone(), c2.clone()]);
    let report = crate::invariants::hilbert_report(&c)?;
    if report.codim != 2 {
        return Err(AlgebraError::Invalid(format!(
            "C has codimension {}, not a complete intersection of height 2",
            report.codim
        )));
    }
    let top = vec![g.clone(), a1.clone(), a2.clone()];
    let bottom = vec![f.neg(), b1.clone(), b2.clone()];
    let linked = Ideal::new(ring.clone(), minors2_rows(&top, &bottom));
    // Linkage identities.
    let fg = Ideal::new(ring.clone(), vec![f.clone(), g.clone()]);
    let c_colon_i = c.colon(&linked)?;
    if !c_colon_i.contains_ideal(&fg) {
        return Err(AlgebraError::Invalid(
            "linkage failed: (C : I) does not contain (f, g)".into(),
        ));
    }
    let c_colon_fg = c.colon(&fg)?;
    if !c_colon_fg.equal(&linked) {
        return Err(AlgebraError::Invalid(
            "linkage failed: (C : (f, g)) != I_2(M)".into(),
        ));
    }
    Ok((c, linked))
}

/// A height-two ideal of quadrics written as q_i = a_i x + b_i y: the data
/// of the representing matrices
///   M = ( y  a_1 ... a_g )      A = ( a_1 ... a_g )
///       (-x  b_1 ... b_g )          ( b_1 ... b_g )
/// with I + I_2(A) = I_2(M).
#[derive(Clone, Debug)]
pub struct RepresentationByMinors {
    pub x: Polynomial,
    pub y: Polynomial,
    pub minors_matrix: LinearMatrix,
    pub coefficient_matrix: LinearMatrix,
    pub a: Vec<Polynomial>,
    pub b: Vec<Polynomial>,
}

/// Solves q_i = a_i x + b_i y for each minimal generator by linear algebra
/// in the degree-two piece, taking the reduced-row-echelon particular
/// solution (the matrices are not unique).
pub fn representation_by_minors(
    ideal: &Ideal,
    x: &Polynomial,
    y: &Polynomial,
) -> Result<RepresentationByMinors> {
    let ring = ideal.ring.clone();
    let n = ring.nvars();
    let field = &ring.field;
    if linear_rank(&[x.clone(), y.clone()]) != 2 {
        return Err(AlgebraError::Invalid(
            "x and y must be independent linear forms".into(),
        ));
    }
    let (gens, _) = ideal.minimal_generators()?;
    for q in &gens {
        if q.degree() != Some(2) {
            return Err(AlgebraError::Invalid(
                "representation by minors needs an ideal of quadrics".into(),
            ));
        }
    }
    // Unknowns: coefficients of a_i (n) then b_i (n); equations over the
    // monomial basis of degree two.
    let basis = crate::ideal::monomials_of_degree(&ring, 2);
    let index: std::collections::BTreeMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut system = Matrix::zero(basis.len(), 2 * n, field);
    for v in 0..n {
        let xv = x.mul(&Polynomial::var(ring.clone(), v));
        for (c, m) in &xv.terms {
            *system.at_mut(index[m], v) = c.clone();
        }
        let yv = y.mul(&Polynomial::var(ring.clone(), v));
        for (c, m) in &yv.terms {
            *system.at_mut(index[m], n + v) = c.clone();
        }
    }
    let mut a = Vec::with_capacity(gens.len());
    let mut b = Vec::with_capacity(gens.len());
    for q in &gens {
        let rhs: Vec<Scalar> = {
            let mut v = vec![field.zero(); basis.len()];
            for (c, m) in &q.terms {
                v[index[m]] = c.clone();
            }
            v
        };
        let sol = system.solve(&rhs).ok_or_else(|| {
            AlgebraError::Invalid(format!("generator {q} does not lie in (x, y)"))
        })?;
        let mk = |coeffs: &[Scalar]| {
            Polynomial::from_terms(
                ring.clone(),
                coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (c.clone(), Monomial::var(i, n)))
                    .collect(),
            )
        };
        a.push(mk(&sol[..n]));
        b.push(mk(&sol[n..]));
        // re-expansion check
        let back = a.last().unwrap().mul(x).add(&b.last().unwrap().mul(y));
        if &back != q {
            return Err(AlgebraError::Invalid(
                "solver failed to reproduce a generator".into(),
            ));
        }
    }
    let mut top = vec![y.clone()];
    top.extend(a.iter().cloned());
    let mut bottom = vec![x.neg()];
    bottom.extend(b.iter().cloned());
    let minors_matrix = LinearMatrix::new(ring.clone(), vec![top, bottom])?;
    let coefficient_matrix =
        LinearMatrix::new(ring.clone(), vec![a.clone(), b.clone()])?;
    // I + I_2(A) = I_2(M), semantically.
    let lhs = ideal.sum(&minors2(&coefficient_matrix)?);
    let rhs = minors2(&minors_matrix)?;
    if !lhs.equal(&rhs) {
        return Err(AlgebraError::Invalid(
            "representation identity I + I2(A) = I2(M) failed".into(),
        ));
    }
    Ok(RepresentationByMinors {
        x: x.clone(),
        y: y.clone(),
        minors_matrix,
        coefficient_matrix,
        a,
        b,
    })
}

/// A chain map between two resolutions: maps[i] sends source.modules[i] to
/// target.modules[i], commuting with the differentials.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: Resolution,
    pub target: Resolution,
    pub maps: Vec<GradedMap>,
}

impl ChainMap {
    /// Validates the commutation d^F_i ∘ phi_i = phi_{i-1} ∘ d^G_i exactly.
    pub fn new(source: Resolution, target: Resolution, maps: Vec<GradedMap>) -> Result<ChainMap> {
        if maps.len() != source.modules.len() {
            return Err(AlgebraError::Invalid(
                "need one lift per source module".into(),
            ));
        }
        for (i, phi) in maps.iter().enumerate() {
            if phi.source.twists != source.modules[i].twists
                || phi.target.twists != target.modules.get(i).map_or(Vec::new(), |m| m.twists.clone())
            {
                return Err(AlgebraError::Invalid(format!(
                    "lift {i} has wrong endpoints"
                )));
            }
        }
        for i in 1..source.modules.len() {
            if i >= target.maps.len() + 1 {
                break;
            }
            let lhs = target.maps[i - 1].compose(&maps[i]);
            let rhs = maps[i - 1].compose(&source.maps[i - 1]);
            if lhs != rhs {
                return Err(AlgebraError::Invalid(format!(
                    "lift does not commute at homological degree {i}"
                )));
            }
        }
        Ok(ChainMap {
            source,
            target,
            maps,
        })
    }

    /// Lift of multiplication by a homogeneous element: the source is the
    /// target twisted by its degree, every lift map is multiplication by it.
    pub fn multiplication(target: &Resolution, q: &Polynomial) -> Result<ChainMap> {
        if q.is_zero() || !q.is_homogeneous() {
            return Err(AlgebraError::Invalid(
                "need a nonzero homogeneous multiplier".into(),
            ));
        }
        let d = i64::from(q.degree().unwrap());
        let mut source = target.clone();
        for m in source.modules.iter_mut() {
            for t in m.twists.iter_mut() {
                *t += d;
            }
        }
        for (i, map) in source.maps.iter_mut().enumerate() {
            map.source = source.modules[i + 1].clone();
            map.target = source.modules[i].clone();
        }
        let maps = source
            .modules
            .iter()
            .zip(&target.modules)
            .map(|(src, dst)| {
                let mut entries =
                    vec![vec![Polynomial::zero(target.ring.clone()); src.rank()]; dst.rank()];
                for i in 0..src.rank() {
                    entries[i][i] = q.clone();
                }
                GradedMap::new(
                    target.ring.clone(),
                    src.clone(),
                    dst.clone(),
                    entries,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        ChainMap::new(source, target.clone(), maps)
    }
}

/// The mapping cone of a chain map phi: G -> F, with modules
/// C_i = F_i ⊕ G_{i-1} and differential [d^F, phi; 0, -d^G].
pub fn mapping_cone(chain: &ChainMap) -> Result<Resolution> {
    let f = &chain.target;
    let g = &chain.source;
    let ring = f.ring.clone();
    let len = f.modules.len().max(g.modules.len() + 1);
    let zero_mod = GradedFreeModule { twists: vec![] };
    let fmod = |i: usize| f.modules.get(i).unwrap_or(&zero_mod).clone();
    let gmod = |i: usize| {
        if i == 0 {
            zero_mod.clone()
        } else {
            g.modules.get(i - 1).unwrap_or(&zero_mod).clone()
        }
    };
    let mut modules = Vec::with_capacity(len);
    for i in 0..len {
        let mut twists = fmod(i).twists;
        twists.extend(gmod(i).twists);
        modules.push(GradedFreeModule { twists });
    }
    let mut maps = Vec::with_capacity(len - 1);
    for i in 1..len {
        let (fr, gr) = (fmod(i - 1).rank(), gmod(i - 1).rank());
        let (fc, gc) = (fmod(i).rank(), gmod(i).rank());
        let mut entries =
            vec![vec![Polynomial::zero(ring.clone()); fc + gc]; fr + gr];
        // top-left: d^F_i
        if let Some(df) = f.maps.get(i - 1) {
            for r in 0..fr {
                for c in 0..fc {
                    entries[r][c] = df.entries[r][c].clone();
                }
            }
        }
        // top-right: phi_{i-1}
        if gc > 0 {
            let phi = &chain.maps[i - 1];
            for r in 0..fr {
                for c in 0..gc {
                    entries[r][fc + c] = phi.entries[r][c].clone();
                }
            }
        }
        // bottom-right: -d^G_{i-1}
        if i >= 2 && gc > 0 && gr > 0 {
            let dg = &g.maps[i - 2];
            for r in 0..gr {
                for c in 0..gc {
                    entries[fr + r][fc + c] = dg.entries[r][c].neg();
                }
            }
        }
        maps.push(GradedMap::new(
            ring.clone(),
            modules[i].clone(),
            modules[i - 1].clone(),
            entries,
        )?);
    }
    let cone = Resolution {
        ring,
        modules,
        maps,
        minimal: false,
    };
    if !cone.verify_complex() {
        return Err(AlgebraError::Invalid(
            "mapping cone is not a complex (lift does not commute)".into(),
        ));
    }
    Ok(cone)
}

/// The explicit resolution of S/(x, y)^2 (Hilbert-Burch shape) for two
/// independent linear forms:
///   S <- S(-2)^3 <- S(-3)^2 with d1 = (x^2 xy y^2), d2 = (y 0; -x y; 0 -x).
pub fn xy_square_resolution(x: &Polynomial, y: &Polynomial) -> Result<Resolution> {
    let ring = x.ring.clone();
    if linear_rank(&[x.clone(), y.clone()]) != 2 {
        return Err(AlgebraError::Invalid(
            "need two independent linear forms".into(),
        ));
    }
    let zero = Polynomial::zero(ring.clone());
    let f0 = GradedFreeModule { twists: vec![0] };
    let f1 = GradedFreeModule {
        twists: vec![2, 2, 2],
    };
    let f2 = GradedFreeModule { twists: vec![3, 3] };
    let d1 = GradedMap::new(
        ring.clone(),
        f1.clone(),
        f0.clone(),
        vec![vec![x.mul(x), x.mul(y), y.mul(y)]],
    )?;
    let d2 = GradedMap::new(
        ring.clone(),
        f2.clone(),
        f1.clone(),
        vec![
            vec![y.clone(), zero.clone()],
            vec![x.neg(), y.clone()],
            vec![zero.clone(), x.neg()],
        ],
    )?;
    Ok(Resolution {
        ring,
        modules: vec![f0, f1, f2],
        maps: vec![d1, d2],
        minimal: false,
    })
}

/// The displayed chain map lifting multiplication by xz + yw from the
/// twisted Koszul resolution of S/(x, y)(-2) to the resolution of
/// S/(x, y)^2. Its cone is a minimal resolution of
/// S/((x, y)^2, xz + yw).
pub fn ia_quadric_chain_map(
    x: &Polynomial,
    y: &Polynomial,
    z: &Polynomial,
    w: &Polynomial,
) -> Result<ChainMap> {
    let ring = x.ring.clone();
    if linear_rank(&[x.clone(), y.clone(), z.clone(), w.clone()]) != 4 {
        return Err(AlgebraError::Invalid(
            "need four independent linear forms".into(),
        ));
    }
    let zero = Polynomial::zero(ring.clone());
    let target = xy_square_resolution(x, y)?;
    // G: Koszul complex on (x, y), twisted by -2.
    let g0 = GradedFreeModule { twists: vec![2] };
    let g1 = GradedFreeModule { twists: vec![3, 3] };
    let g2 = GradedFreeModule { twists: vec![4] };
    let dg1 = GradedMap::new(
        ring.clone(),
        g1.clone(),
        g0.clone(),
        vec![vec![x.clone(), y.clone()]],
    )?;
    let dg2 = GradedMap::new(
        ring.clone(),
        g2.clone(),
        g1.clone(),
        vec![vec![y.clone()], vec![x.neg()]],
    )?;
    let source = Resolution {
        ring: ring.clone(),
        modules: vec![g0.clone(), g1.clone(), g2.clone()],
        maps: vec![dg1, dg2],
        minimal: false,
    };
    let q = x.mul(z).add(&y.mul(w));
    let phi0 = GradedMap::new(
        ring.clone(),
        g0,
        target.modules[0].clone(),
        vec![vec![q]],
    )?;
    let phi1 = GradedMap::new(
        ring.clone(),
        g1,
        target.modules[1].clone(),
        vec![
            vec![z.clone(), zero.clone()],
            vec![w.clone(), z.clone()],
            vec![zero.clone(), w.clone()],
        ],
    )?;
    let phi2 = GradedMap::new(
        ring.clone(),
        g2,
        target.modules[2].clone(),
        vec![vec![z.clone()], vec![w.clone()]],
    )?;
    ChainMap::new(source, target, vec![phi0, phi1, phi2])
}

/// Expresses a quadric q in (a_1, ..., a_k) as q = sum l_i a_i with linear
/// l_i, solving degree-wise; used to lift multiplication maps in the (i_b)
/// mapping cone.
pub fn express_in_linear_ideal(
    q: &Polynomial,
    forms: &[Polynomial],
) -> Result<Vec<Polynomial>> {
    let ring = q.ring.clone();
    let n = ring.nvars();
    let field = &ring.field;
    let basis = crate::ideal::monomials_of_degree(&ring, 2);
    let index: std::collections::BTreeMap<&Monomial, usize> =
        basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let k = forms.len();
    let mut system = Matrix::zero(basis.len(), k * n, field);
    for (fi, form) in forms.iter().enumerate() {
        for v in 0..n {
            let prod = form.mul(&Polynomial::var(ring.clone(), v));
            for (c, m) in &prod.terms {
                let col = fi * n + v;
                *system.at_mut(index[m], col) = system.at(index[m], col).add(c);
            }
        }
    }
    let mut rhs = vec![field.zero(); basis.len()];
    for (c, m) in &q.terms {
        rhs[index[m]] = c.clone();
    }
    let sol = system
        .solve(&rhs)
        .ok_or_else(|| AlgebraError::Invalid("q is not in the linear ideal".into()))?;
    Ok((0..k)
        .map(|fi| {
            Polynomial::from_terms(
                ring.clone(),
                (0..n)
                    .map(|v| (sol[fi * n + v].clone(), Monomial::var(v, n)))
                    .collect(),
            )
        })
        .collect())
}

/// The (i_b) mapping cone: F resolves S/(a_1 x, ..., a_{g-1} x), G is the
/// Koszul complex on x twisted by -2, and the lift of multiplication by q
/// uses an expression q = sum l_i a_i.
pub fn ib_chain_map(
    a: &[Polynomial],
    x: &Polynomial,
    q: &Polynomial,
) -> Result<ChainMap> {
    let ring = x.ring.clone();
    let target = scaled_koszul(x, a)?;
    let ells = express_in_linear_ideal(q, a)?;
    let g0 = GradedFreeModule { twists: vec![2] };
    let g1 = GradedFreeModule { twists: vec![3] };
    let dg1 = GradedMap::new(ring.clone(), g1.clone(), g0.clone(), vec![vec![x.clone()]])?;
    let source = Resolution {
        ring: ring.clone(),
        modules: vec![g0.clone(), g1.clone()],
        maps: vec![dg1],
        minimal: false,
    };
    let phi0 = GradedMap::new(
        ring.clone(),
        g0,
        target.modules[0].clone(),
        vec![vec![q.clone()]],
    )?;
    let phi1 = GradedMap::new(
        ring.clone(),
        g1,
        target.modules[1].clone(),
        ells.iter().map(|l| vec![l.clone()]).collect(),
    )?;
    ChainMap::new(source, target, vec![phi0, phi1])
}
