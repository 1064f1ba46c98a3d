//! Graded free modules, graded maps, free resolutions, and Betti tables.
//!
//! Resolutions are built by iterated syzygy computation with Schreyer
//! induced orders, then minimized by pruning unit entries. The Betti oracle
//! recomputes graded Betti numbers as Koszul homology ranks, independent of
//! the resolution pipeline, and is the cross-check for everything else.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Scalar;
use crate::groebner;
use crate::ideal::{monomials_of_degree, Ideal};
use crate::linalg::Matrix;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::PolyRing;
use crate::syzygy::{syzygy_columns, ModElem, ModOrder, ModTerm};

/// A graded free module, described by its generator twists: twist d means a
/// generator in degree d, i.e. a summand S(-d).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedFreeModule {
    pub twists: Vec<i64>,
}

impl GradedFreeModule {
    pub fn rank(&self) -> usize {
        self.twists.len()
    }
}

/// A degree-zero map of graded free modules, stored as a matrix of
/// polynomials: entry (i, j) is the coefficient of target generator i in
/// the image of source generator j.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMap {
    pub ring: Arc<PolyRing>,
    pub source: GradedFreeModule,
    pub target: GradedFreeModule,
    pub entries: Vec<Vec<Polynomial>>,
}

impl GradedMap {
    /// Validates shape and homogeneity: entry (i, j) must be zero or
    /// homogeneous of degree source twist j minus target twist i.
    pub fn new(
        ring: Arc<PolyRing>,
        source: GradedFreeModule,
        target: GradedFreeModule,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        if entries.len() != target.rank()
            || entries.iter().any(|row| row.len() != source.rank())
        {
            return Err(AlgebraError::Invalid("map shape mismatch".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                if e.is_zero() {
                    continue;
                }
                let want = source.twists[j] - target.twists[i];
                if !e.is_homogeneous() || i64::from(e.degree().unwrap()) != want {
                    return Err(AlgebraError::Invalid(format!(
                        "entry ({i},{j}) is not homogeneous of degree {want}"
                    )));
                }
            }
        }
        Ok(GradedMap {
            ring,
            source,
            target,
            entries,
        })
    }

    pub fn zero_map(ring: Arc<PolyRing>, source: GradedFreeModule, target: GradedFreeModule) -> Self {
        let entries =
            vec![vec![Polynomial::zero(ring.clone()); source.rank()]; target.rank()];
        GradedMap {
            ring,
            source,
            target,
            entries,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &GradedMap) -> GradedMap {
        assert_eq!(self.source.rank(), other.target.rank(), "shape mismatch");
        let rows = self.target.rank();
        let cols = other.source.rank();
        let mut entries = vec![vec![Polynomial::zero(self.ring.clone()); cols]; rows];
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = Polynomial::zero(self.ring.clone());
                for k in 0..self.source.rank() {
                    if self.entries[i][k].is_zero() || other.entries[k][j].is_zero() {
                        continue;
                    }
                    acc = acc.add(&self.entries[i][k].mul(&other.entries[k][j]));
                }
                entries[i][j] = acc;
            }
        }
        GradedMap {
            ring: self.ring.clone(),
            source: other.source.clone(),
            target: self.target.clone(),
            entries,
        }
    }

    /// The dual map Hom(-, S): transposed entries, negated twists.
    pub fn transpose_dual(&self) -> GradedMap {
        let source = GradedFreeModule {
            twists: self.target.twists.iter().map(|t| -t).collect(),
        };
        let target = GradedFreeModule {
            twists: self.source.twists.iter().map(|t| -t).collect(),
        };
        let mut entries =
            vec![vec![Polynomial::zero(self.ring.clone()); source.rank()]; target.rank()];
        for i in 0..self.target.rank() {
            for j in 0..self.source.rank() {
                entries[j][i] = self.entries[i][j].clone();
            }
        }
        GradedMap {
            ring: self.ring.clone(),
            source,
            target,
            entries,
        }
    }

    /// Columns as free-module elements.
    pub fn columns(&self) -> Vec<ModElem> {
        (0..self.source.rank())
            .map(|j| {
                let mut terms = Vec::new();
                for (i, row) in self.entries.iter().enumerate() {
                    for (c, m) in &row[j].terms {
                        terms.push(ModTerm {
                            coeff: c.clone(),
                            comp: i,
                            mono: m.clone(),
                        });
                    }
                }
                ModElem { terms }
            })
            .collect()
    }

    /// Rebuilds a map from syzygy columns over `target`, inferring source
    /// twists from homogeneity.
    pub fn from_columns(
        ring: Arc<PolyRing>,
        target: GradedFreeModule,
        cols: &[ModElem],
    ) -> Result<GradedMap> {
        let mut twists = Vec::with_capacity(cols.len());
        for col in cols {
            let mut twist: Option<i64> = None;
            for t in &col.terms {
                let d = i64::from(t.mono.degree()) + target.twists[t.comp];
                match twist {
                    None => twist = Some(d),
                    Some(prev) if prev == d => {}
                    Some(_) => {
                        return Err(AlgebraError::Invalid(
                            "non-homogeneous syzygy column".into(),
                        ))
                    }
                }
            }
            twists.push(twist.ok_or_else(|| {
                AlgebraError::Invalid("zero syzygy column".into())
            })?);
        }
        let source = GradedFreeModule { twists };
        let mut entries =
            vec![vec![Polynomial::zero(ring.clone()); source.rank()]; target.rank()];
        for (j, col) in cols.iter().enumerate() {
            let mut per_comp: BTreeMap<usize, Vec<(Scalar, Monomial)>> = BTreeMap::new();
            for t in &col.terms {
                per_comp
                    .entry(t.comp)
                    .or_default()
                    .push((t.coeff.clone(), t.mono.clone()));
            }
            for (comp, terms) in per_comp {
                entries[comp][j] = Polynomial::from_terms(ring.clone(), terms);
            }
        }
        GradedMap::new(ring, source, target, entries)
    }
}

/// A chain of graded maps with matching endpoints: maps[k] sends
/// modules[k+1] to modules[k]; modules[0] is the augmentation target.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub ring: Arc<PolyRing>,
    pub modules: Vec<GradedFreeModule>,
    pub maps: Vec<GradedMap>,
    pub minimal: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.maps.len()
    }

    /// Exact composition-zero check for every consecutive pair.
    pub fn verify_complex(&self) -> bool {
        for k in 1..self.maps.len() {
            if !self.maps[k - 1].compose(&self.maps[k]).is_zero() {
                return false;
            }
        }
        true
    }

    /// Twist census: beta_{i,j} = number of generators of modules[i] in
    /// degree j. Meaningful as Betti numbers only for minimal resolutions.
    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, module) in self.modules.iter().enumerate() {
            for &t in &module.twists {
                *entries.entry((i, t)).or_insert(0u64) += 1;
            }
        }
        BettiTable { entries }
    }
}

/// Graded Betti numbers: (homological degree i, internal degree j) -> count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn beta(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((bi, _), _)| *bi == i)
            .map(|(_, v)| v)
            .sum()
    }

    /// Largest homological degree with a nonzero entry.
    pub fn projective_dimension(&self) -> usize {
        self.entries
            .iter()
            .filter(|(_, v)| **v > 0)
            .map(|((i, _), _)| *i)
            .max()
            .unwrap_or(0)
    }

    /// max { j - i : beta_{i,j} != 0 }, the Castelnuovo-Mumford regularity
    /// for tables of minimal resolutions.
    pub fn regularity(&self) -> i64 {
        self.entries
            .iter()
            .filter(|(_, v)| **v > 0)
            .map(|((i, j), _)| j - (*i as i64))
            .max()
            .unwrap_or(0)
    }

    /// Builds a table from rows in display convention: row j lists
    /// beta_{i, i+j} for i = 0, 1, 2, ...
    pub fn from_display_rows(rows: &[(i64, Vec<u64>)]) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (j, cols) in rows {
            for (i, &v) in cols.iter().enumerate() {
                if v > 0 {
                    entries.insert((i, i as i64 + j), v);
                }
            }
        }
        BettiTable { entries }
    }
}

impl fmt::Display for BettiTable {
    /// Paper layout: column i, row j holds beta_{i, i+j}; `--` for zero;
    /// single spaces as separators. Byte-stable across platforms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.projective_dimension();
        let reg = self.regularity().max(0);
        write!(f, "|")?;
        for i in 0..=pd {
            write!(f, " {i}")?;
        }
        writeln!(f)?;
        for j in 0..=reg {
            write!(f, "{j} |")?;
            for i in 0..=pd {
                let v = self.beta(i, i as i64 + j);
                if v == 0 {
                    write!(f, " --")?;
                } else {
                    write!(f, " {v}")?;
                }
            }
            if j < reg {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Generators of the kernel of a graded map, as a graded map whose image
/// is exactly that kernel. The tag block of the underlying elimination
/// order carries the Schreyer order induced by the column leads.
pub fn syzygies(map: &GradedMap, order: &MonomialOrder) -> Result<GradedMap> {
    for row in &map.entries {
        for e in row {
            if !e.is_zero() && !e.is_homogeneous() {
                return Err(AlgebraError::Invalid(
                    "syzygies require homogeneous entries".into(),
                ));
            }
        }
    }
    let (cols, _) = syzygy_columns(
        &map.columns(),
        map.target.rank(),
        &ModOrder::Top {
            base: order.clone(),
        },
    );
    if cols.is_empty() {
        return Ok(GradedMap::zero_map(
            map.ring.clone(),
            GradedFreeModule { twists: vec![] },
            map.source.clone(),
        ));
    }
    GradedMap::from_columns(map.ring.clone(), map.source.clone(), &cols)
}

/// A free resolution of S/I by iterated syzygies under Schreyer induced
/// orders, starting from the minimal generators of I. Not minimal in
/// general; see [`minimize`].
pub fn free_resolution(ideal: &Ideal, order: &MonomialOrder) -> Result<Resolution> {
    let ring = ideal.ring.clone();
    let f0 = GradedFreeModule { twists: vec![0] };
    let (mingens, _) = ideal.minimal_generators()?;
    if mingens.is_empty() {
        return Ok(Resolution {
            ring,
            modules: vec![f0],
            maps: Vec::new(),
            minimal: true,
        });
    }
    let f1 = GradedFreeModule {
        twists: mingens
            .iter()
            .map(|g| i64::from(g.degree().unwrap()))
            .collect(),
    };
    let d1 = GradedMap::new(
        ring.clone(),
        f1,
        f0.clone(),
        vec![mingens.clone()],
    )?;

    let mut modules = vec![f0, d1.source.clone()];
    let mut maps = vec![d1];
    let mut level_order = ModOrder::Top {
        base: order.clone(),
    };

    let cap = ring.nvars() + 4;
    loop {
        let last = maps.last().unwrap();
        let (syz, schreyer) =
            syzygy_columns(&last.columns(), last.target.rank(), &level_order);
        if syz.is_empty() {
            break;
        }
        if maps.len() >= cap {
            return Err(AlgebraError::BoundExhausted(
                "resolution exceeded the variable-count bound".into(),
            ));
        }
        let next = GradedMap::from_columns(
            ring.clone(),
            modules.last().unwrap().clone(),
            &syz,
        )?;
        modules.push(next.source.clone());
        maps.push(next);
        level_order = schreyer;
    }

    Ok(Resolution {
        ring,
        modules,
        maps,
        minimal: false,
    })
}

/// Prunes unit entries from a resolution, one at a time, scanning the
/// lowest homological degree first with the first unit entry in row-major
/// order as pivot. The result is a minimal resolution of the same module.
pub fn minimize(res: &Resolution) -> Resolution {
    let ring = res.ring.clone();
    let mut twists: Vec<Vec<i64>> = res.modules.iter().map(|m| m.twists.clone()).collect();
    let mut maps: Vec<Vec<Vec<Polynomial>>> =
        res.maps.iter().map(|m| m.entries.clone()).collect();

    'outer: loop {
        for k in 0..maps.len() {
            if let Some((r, c)) = find_unit(&maps[k]) {
                prune(&ring, &mut twists, &mut maps, k, r, c);
                continue 'outer;
            }
        }
        break;
    }

    // Drop trailing zero-rank modules.
    while let Some(last) = maps.last() {
        let cols = last.first().map_or(0, |row| row.len());
        if cols == 0 {
            maps.pop();
            twists.pop();
        } else {
            break;
        }
    }
    // A map with zero rows can only happen if S/I = 0; keep shapes sane.
    let modules: Vec<GradedFreeModule> = twists
        .into_iter()
        .map(|t| GradedFreeModule { twists: t })
        .collect();
    let maps: Vec<GradedMap> = maps
        .into_iter()
        .enumerate()
        .map(|(k, entries)| GradedMap {
            ring: ring.clone(),
            source: modules[k + 1].clone(),
            target: modules[k].clone(),
            entries,
        })
        .collect();
    Resolution {
        ring,
        modules,
        maps,
        minimal: true,
    }
}

fn find_unit(entries: &[Vec<Polynomial>]) -> Option<(usize, usize)> {
    for (r, row) in entries.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            if !e.is_zero() && e.degree() == Some(0) {
                return Some((r, c));
            }
        }
    }
    None
}

/// Cancels the unit pivot at (r, c) of maps[k]: column operations clear row
/// r (with the matching update to maps[k+1]); row operations then only zero
/// out column c, and composition-zero makes the column-r update to
/// maps[k-1] vanish identically, so generator r of modules[k] and generator
/// c of modules[k+1] can both be deleted.
fn prune(
    _ring: &Arc<PolyRing>,
    twists: &mut [Vec<i64>],
    maps: &mut [Vec<Vec<Polynomial>>],
    k: usize,
    r: usize,
    c: usize,
) {
    let u_inv = maps[k][r][c]
        .leading_term()
        .unwrap()
        .0
        .inv()
        .expect("unit entry");
    let ncols = maps[k][0].len();
    // Save multipliers f_j = entry(r, j) / u before clearing.
    let mults: Vec<Polynomial> = (0..ncols)
        .map(|j| maps[k][r][j].scale(&u_inv))
        .collect();
    // Column ops on maps[k]: col_j -= f_j * col_c.
    for j in 0..ncols {
        if j == c || mults[j].is_zero() {
            continue;
        }
        for i in 0..maps[k].len() {
            let sub = mults[j].mul(&maps[k][i][c]);
            maps[k][i][j] = maps[k][i][j].sub(&sub);
        }
    }
    // Matching basis change in modules[k+1]: row c of maps[k+1] absorbs the
    // multiples of the other rows.
    if k + 1 < maps.len() {
        let next_cols = maps[k + 1][0].len();
        for j in 0..ncols {
            if j == c || mults[j].is_zero() {
                continue;
            }
            for t in 0..next_cols {
                let add = mults[j].mul(&maps[k + 1][j][t]);
                maps[k + 1][c][t] = maps[k + 1][c][t].add(&add);
            }
        }
    }
    // Delete row r and column c of maps[k].
    maps[k].remove(r);
    for row in maps[k].iter_mut() {
        row.remove(c);
    }
    twists[k].remove(r);
    twists[k + 1].remove(c);
    // Row r of modules[k] disappears: drop column r of maps[k-1]; the
    // arithmetic update is identically zero by composition-zero.
    if k > 0 {
        for row in maps[k - 1].iter_mut() {
            row.remove(r);
        }
    }
    // Column c of modules[k+1] disappears: drop row c of maps[k+1].
    if k + 1 < maps.len() {
        maps[k + 1].remove(c);
    }
}

/// The graded Betti table of S/I: minimal free resolution, then the twist
/// census.
pub fn betti_table(ideal: &Ideal) -> Result<BettiTable> {
    let res = minimize(&free_resolution(ideal, &MonomialOrder::GrevLex)?);
    debug_assert!(res.verify_complex());
    Ok(res.betti())
}

/// Upper bound on the dimension of any graded piece handled by the oracle.
const ORACLE_PIECE_BOUND: usize = 20_000;

/// Betti numbers computed as Koszul homology ranks, independent of the
/// resolution pipeline: beta_{i,j} = dim H_i(K_bullet ⊗ S/I)_j where
/// K_bullet is the Koszul complex on the variables.
pub fn betti_oracle(ideal: &Ideal, max_i: usize, max_j: i64) -> Result<BettiTable> {
    let ring = &ideal.ring;
    let n = ring.nvars();
    let field = &ring.field;
    let gb = ideal.groebner_under(&MonomialOrder::GrevLex);
    let leads: Vec<Monomial> = gb
        .gens
        .iter()
        .map(|g| g.leading_term_under(&gb.order).unwrap().1.clone())
        .collect();

    // Standard monomial bases of R = S/I per degree.
    let top_degree = max_j.max(0) as u32;
    let mut std_basis: Vec<Vec<Monomial>> = Vec::new();
    for d in 0..=top_degree {
        let all = monomials_of_degree(ring, d);
        let std: Vec<Monomial> = all
            .into_iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .collect();
        std_basis.push(std);
    }

    // Multiplication-by-x_v matrices R_d -> R_{d+1} in the standard bases.
    let mut mult: Vec<Vec<Matrix>> = Vec::new(); // mult[d][v]
    for d in 0..top_degree {
        let src = &std_basis[d as usize];
        let dst = &std_basis[(d + 1) as usize];
        let dst_index: BTreeMap<&Monomial, usize> =
            dst.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut per_var = Vec::new();
        for v in 0..n {
            let mut m = Matrix::zero(dst.len(), src.len(), field);
            for (j, mono) in src.iter().enumerate() {
                let prod = mono.mul(&Monomial::var(v, n));
                let as_poly = Polynomial::monomial(ring.clone(), field.one(), prod);
                let nf = if gb.gens.is_empty() {
                    as_poly
                } else {
                    groebner::normal_form(&as_poly, &gb.gens, &gb.order)
                        .expect("nonzero basis")
                        .remainder
                };
                for (c, mm) in &nf.terms {
                    if let Some(&i) = dst_index.get(mm) {
                        *m.at_mut(i, j) = c.clone();
                    }
                }
            }
            per_var.push(m);
        }
        mult.push(per_var);
    }

    // Koszul strand matrices and ranks.
    let subsets: Vec<Vec<Vec<usize>>> = (0..=max_i.min(n) + 1)
        .map(|i| subsets_of_size(n, i))
        .collect();
    let mut table = BTreeMap::new();
    for j in 0..=max_j.max(0) {
        // rank of d_i : (K_i ⊗ R)_j -> (K_{i-1} ⊗ R)_j for each i
        let mut ranks: Vec<usize> = Vec::new();
        let mut dims: Vec<usize> = Vec::new();
        for i in 0..=max_i.min(n) + 1 {
            let internal = j - i as i64;
            let dim_r = if internal < 0 || internal > top_degree as i64 {
                0
            } else {
                std_basis[internal as usize].len()
            };
            dims.push(subsets[i].len() * dim_r);
        }
        for piece in &dims {
            if *piece > ORACLE_PIECE_BOUND {
                return Err(AlgebraError::SearchBound(format!(
                    "oracle graded piece of dimension {piece} exceeds bound"
                )));
            }
        }
        for i in 1..=max_i.min(n) + 1 {
            let internal_src = j - i as i64;
            if internal_src < 0
                || internal_src > top_degree as i64
                || dims[i] == 0
                || dims[i - 1] == 0
            {
                ranks.push(0);
                continue;
            }
            let src_dim_r = std_basis[internal_src as usize].len();
            let dst_dim_r = std_basis[(internal_src + 1) as usize].len();
            let mut mat = Matrix::zero(dims[i - 1], dims[i], field);
            // d(e_T ⊗ m) = sum_k (-1)^{k+1} e_{T minus t_k} ⊗ x_{t_k} m
            let dst_pos: BTreeMap<&[usize], usize> = subsets[i - 1]
                .iter()
                .enumerate()
                .map(|(p, s)| (s.as_slice(), p))
                .collect();
            for (b, t_set) in subsets[i].iter().enumerate() {
                for (k, &v) in t_set.iter().enumerate() {
                    let mut smaller = t_set.clone();
                    smaller.remove(k);
                    let block = dst_pos[smaller.as_slice()];
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let mv = &mult[internal_src as usize][v];
                    for col in 0..src_dim_r {
                        for rowr in 0..dst_dim_r {
                            let val = mv.at(rowr, col);
                            if val.is_zero() {
                                continue;
                            }
                            let val = if sign < 0 { val.neg() } else { val.clone() };
                            let gi = block * dst_dim_r + rowr;
                            let gj = b * src_dim_r + col;
                            *mat.at_mut(gi, gj) = mat.at(gi, gj).add(&val);
                        }
                    }
                }
            }
            ranks.push(mat.rank());
        }
        for i in 0..=max_i.min(n) {
            let dim = dims[i];
            let rank_in = if i == 0 { 0 } else { ranks[i - 1] };
            let rank_out = ranks[i];
            let beta = dim - rank_in - rank_out;
            if beta > 0 {
                table.insert((i, j), beta as u64);
            }
        }
    }
    Ok(BettiTable { entries: table })
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
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
