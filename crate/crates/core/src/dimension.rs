//! Krieger dimension groups as presented inductive limits
//! `lim(Z^r → Z^r)` under the adjacency matrix, with decidable element
//! equality and lagged homomorphisms `[v,j] ↦ [Fv, j+lag]`.
//!
//! Unstable-side presentations store the same matrix and apply its
//! transpose everywhere.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::linalg::{eventual_range, solve_integer, EventualRange};
use crate::{Int, IntMatrix, Rat, RatMatrix};

/// Serialized level cap; keeps representatives bounded on the wire.
pub const MAX_LEVEL: u32 = 1 << 31;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DimensionError {
    #[error("presentation matrix must be square")]
    NotSquare,
    #[error("presentation matrix must be nonnegative")]
    NotNonnegative,
    #[error("graph is not essential")]
    NotEssential,
    #[error("vector length {got} does not match rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("homomorphisms have different signatures")]
    SignatureMismatch,
    #[error("intertwining identity fails first at entry ({row}, {col})")]
    NotIntertwining { row: usize, col: usize },
    #[error("level exceeds the serialization cap 2^31")]
    LevelOverflow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "s")]
    Stable,
    #[serde(rename = "u")]
    Unstable,
}

/// Presentation `(rank, A, side)` of `D^s` or `D^u` of an edge shift.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimGroupPres {
    rank: usize,
    a: IntMatrix,
    side: Side,
}

/// Element `[v, j]` of the inductive limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimElement {
    pub v: Vec<Int>,
    pub j: u32,
}

impl DimElement {
    pub fn new(v: Vec<Int>, j: u32) -> Result<Self, DimensionError> {
        if j > MAX_LEVEL {
            return Err(DimensionError::LevelOverflow);
        }
        Ok(DimElement { v, j })
    }
}

impl Serialize for DimElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("DimElement", 2)?;
        let v: Vec<String> = self.v.iter().map(Int::to_string).collect();
        s.serialize_field("v", &v)?;
        s.serialize_field("j", &self.j)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for DimElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            v: Vec<String>,
            j: u32,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut v = Vec::with_capacity(raw.v.len());
        for s in &raw.v {
            v.push(s.parse::<Int>().map_err(serde::de::Error::custom)?);
        }
        DimElement::new(v, raw.j).map_err(serde::de::Error::custom)
    }
}

impl DimGroupPres {
    pub fn new(a: IntMatrix, side: Side) -> Result<Self, DimensionError> {
        if !a.is_square() {
            return Err(DimensionError::NotSquare);
        }
        if !a.is_nonnegative() {
            return Err(DimensionError::NotNonnegative);
        }
        Ok(DimGroupPres {
            rank: a.rows(),
            a,
            side,
        })
    }

    /// Presentation `(|G⁰|, A_G, side)` of the dimension group of an edge
    /// shift.
    pub fn from_graph(g: &Graph, side: Side) -> Result<Self, GraphError> {
        if !g.is_essential() {
            return Err(GraphError::NotEssential);
        }
        Ok(Self::new(g.adjacency(), side).expect("adjacency is square and nonnegative"))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.a
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The matrix that acts in the inductive limit: `A` on the stable side,
    /// `A^t` on the unstable side.
    pub fn acting(&self) -> IntMatrix {
        match self.side {
            Side::Stable => self.a.clone(),
            Side::Unstable => self.a.transpose(),
        }
    }

    pub fn eventual_range(&self) -> EventualRange {
        eventual_range(&self.acting()).expect("acting matrix is square")
    }

    fn check_len(&self, x: &DimElement) -> Result<(), DimensionError> {
        if x.v.len() != self.rank {
            return Err(DimensionError::DimensionMismatch {
                expected: self.rank,
                got: x.v.len(),
            });
        }
        Ok(())
    }

    /// Decides `[x] = [y]`: with `j ≤ k`, true iff
    /// `A^rank (A^{k-j} x.v - y.v) = 0`. The kernel chain of `A` stabilizes
    /// by exponent `rank`, so this is exact.
    pub fn elem_equal(&self, x: &DimElement, y: &DimElement) -> Result<bool, DimensionError> {
        self.check_len(x)?;
        self.check_len(y)?;
        let (lo, hi) = if x.j <= y.j { (x, y) } else { (y, x) };
        let m = self.acting();
        let lifted = m.pow(hi.j - lo.j).mul_vec(&lo.v);
        let diff: Vec<Int> = lifted
            .into_iter()
            .zip(hi.v.iter())
            .map(|(a, b)| a - b)
            .collect();
        let settled = m.pow(self.rank as u32).mul_vec(&diff);
        Ok(settled.iter().all(num_traits::Zero::is_zero))
    }

    /// Presentational positivity: some representative of the class has
    /// entrywise nonnegative vector within a stabilized-level scan.
    pub fn is_positive_presented(&self, x: &DimElement) -> Result<bool, DimensionError> {
        self.check_len(x)?;
        let m = self.acting();
        let mut v = x.v.clone();
        for _ in 0..=(3 * self.rank + 1) {
            if v.iter().all(|c| !num_traits::Signed::is_negative(c)) {
                return Ok(true);
            }
            v = m.mul_vec(&v);
        }
        Ok(false)
    }

    /// Representative at the minimal level reachable by pulling back through
    /// the acting matrix, preferring the lowest level whose vector is
    /// entrywise nonnegative. Used when printing.
    pub fn normalize_for_display(&self, x: &DimElement) -> DimElement {
        let m = self.acting();
        let mut reps = vec![x.clone()];
        let mut current = x.clone();
        while current.j > 0 {
            match solve_integer(&m, &current.v) {
                Some(w) => {
                    current = DimElement {
                        v: w,
                        j: current.j - 1,
                    };
                    reps.push(current.clone());
                }
                None => break,
            }
        }
        reps.sort_by_key(|r| r.j);
        reps.iter()
            .find(|r| r.v.iter().all(|c| !num_traits::Signed::is_negative(c)))
            .unwrap_or(&reps[0])
            .clone()
    }
}

/// Dimension-group homomorphism `[v,j] ↦ [F v, j+lag]` with the exact
/// intertwining identity `F A_src = A_tgt F` (acting matrices on each side).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaggedHom {
    source: DimGroupPres,
    target: DimGroupPres,
    f: IntMatrix,
    lag: u32,
}

/// Serialized form `{"f": matrix, "lag": n, "side": "s"|"u"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawLaggedHom {
    pub f: IntMatrix,
    pub lag: u32,
    pub side: Side,
}

impl LaggedHom {
    pub fn new(
        source: DimGroupPres,
        target: DimGroupPres,
        f: IntMatrix,
        lag: u32,
    ) -> Result<Self, DimensionError> {
        if source.side != target.side {
            return Err(DimensionError::SignatureMismatch);
        }
        if f.rows() != target.rank || f.cols() != source.rank {
            return Err(DimensionError::DimensionMismatch {
                expected: target.rank,
                got: f.rows(),
            });
        }
        if lag > MAX_LEVEL {
            return Err(DimensionError::LevelOverflow);
        }
        let lhs = f.mul(&source.acting());
        let rhs = target.acting().mul(&f);
        if let Some((row, col)) = lhs.first_difference(&rhs) {
            return Err(DimensionError::NotIntertwining { row, col });
        }
        Ok(LaggedHom {
            source,
            target,
            f,
            lag,
        })
    }

    pub fn identity(d: &DimGroupPres) -> Self {
        LaggedHom {
            source: d.clone(),
            target: d.clone(),
            f: IntMatrix::identity(d.rank),
            lag: 0,
        }
    }

    pub fn source(&self) -> &DimGroupPres {
        &self.source
    }

    pub fn target(&self) -> &DimGroupPres {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.f
    }

    pub fn lag(&self) -> u32 {
        self.lag
    }

    pub fn to_raw(&self) -> RawLaggedHom {
        RawLaggedHom {
            f: self.f.clone(),
            lag: self.lag,
            side: self.source.side,
        }
    }

    pub fn apply(&self, x: &DimElement) -> Result<DimElement, DimensionError> {
        self.source.check_len(x)?;
        DimElement::new(self.f.mul_vec(&x.v), x.j + self.lag)
    }

    /// Equality as maps on the inductive limit: true iff
    /// `A_tgt^rank (A_tgt^{lag2} F1 - A_tgt^{lag1} F2) = 0`.
    pub fn equal(&self, other: &LaggedHom) -> Result<bool, DimensionError> {
        if self.source != other.source || self.target != other.target {
            return Err(DimensionError::SignatureMismatch);
        }
        let m = self.target.acting();
        let lhs = m.pow(other.lag).mul(&self.f);
        let rhs = m.pow(self.lag).mul(&other.f);
        Ok(m.pow(self.target.rank as u32)
            .mul(&lhs.sub(&rhs))
            .is_zero())
    }

    /// `after ∘ before`; the intertwining identity is re-verified.
    pub fn compose(after: &LaggedHom, before: &LaggedHom) -> Result<LaggedHom, DimensionError> {
        if before.target != after.source {
            return Err(DimensionError::SignatureMismatch);
        }
        LaggedHom::new(
            before.source.clone(),
            after.target.clone(),
            after.f.mul(&before.f),
            before.lag + after.lag,
        )
    }

    /// The linear map `(A_tgt^×)^{-lag} ∘ F` restricted to eventual ranges,
    /// in the canonical bases. Well-defined because the intertwining
    /// identity forces `F(R_src) ⊆ R_tgt`.
    pub fn rationalized(&self) -> RatMatrix {
        let er_src = self.source.eventual_range();
        let er_tgt = self.target.eventual_range();
        if er_src.dim() == 0 || er_tgt.dim() == 0 {
            return RatMatrix::zeros(er_tgt.dim(), er_src.dim());
        }
        let f_rat = self.f.map(|x| Rat::from_integer(x.clone()));
        let image = f_rat.mul(&er_src.basis);
        let x = er_tgt
            .basis
            .solve(&image)
            .expect("intertwining forces image into the target eventual range");
        let inv = er_tgt
            .a_times
            .inverse()
            .expect("restriction to the eventual range is invertible");
        inv.pow(self.lag).mul(&x)
    }
}

/// `(σ^s, (σ^{-1})^s)` on a presentation: the forward shift map is
/// `(identity, lag 1)` and its inverse is `(A, lag 0)`; their composition is
/// equal to the identity hom as maps on the limit.
pub fn shift_automorphisms(d: &DimGroupPres) -> (LaggedHom, LaggedHom) {
    let forward = LaggedHom::new(d.clone(), d.clone(), IntMatrix::identity(d.rank), 1)
        .expect("identity intertwines");
    let inverse =
        LaggedHom::new(d.clone(), d.clone(), d.acting(), 0).expect("acting matrix intertwines");
    (forward, inverse)
}

/// Outcome of a rational-proportionality query.
#[derive(Debug, Clone, PartialEq)]
pub struct Proportionality {
    /// The scalar; `None` when no scalar relates the maps.
    pub q: Option<Rat>,
    /// Set when both rationalized maps vanish, making the scalar vacuous;
    /// `q` is reported as 1 in that case.
    pub both_zero: bool,
}

impl Serialize for Proportionality {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("Proportionality", 2)?;
        s.serialize_field("q", &self.q.as_ref().map(Rat::to_string))?;
        s.serialize_field("both_zero", &self.both_zero)?;
        s.end()
    }
}

impl Proportionality {
    fn none() -> Self {
        Proportionality {
            q: None,
            both_zero: false,
        }
    }
}

/// Finds nonzero `q ∈ Q` with `rationalized(h1) = q · rationalized(h2)`.
pub fn rationally_proportional(
    h1: &LaggedHom,
    h2: &LaggedHom,
) -> Result<Proportionality, DimensionError> {
    if h1.source != h2.source || h1.target != h2.target {
        return Err(DimensionError::SignatureMismatch);
    }
    let m1 = h1.rationalized();
    let m2 = h2.rationalized();
    Ok(proportionality_of(&m1, &m2))
}

pub(crate) fn proportionality_of(m1: &RatMatrix, m2: &RatMatrix) -> Proportionality {
    if m1.is_zero() && m2.is_zero() {
        return Proportionality {
            q: Some(crate::rat(1)),
            both_zero: true,
        };
    }
    if m1.is_zero() || m2.is_zero() {
        return Proportionality::none();
    }
    let mut q = None;
    for r in 0..m2.rows() {
        for c in 0..m2.cols() {
            if !num_traits::Zero::is_zero(&m2[(r, c)]) {
                q = Some(m1[(r, c)].clone() / m2[(r, c)].clone());
                break;
            }
        }
        if q.is_some() {
            break;
        }
    }
    let q = q.expect("m2 is nonzero");
    if num_traits::Zero::is_zero(&q) {
        return Proportionality::none();
    }
    if m1 == &m2.scale(&q) {
        Proportionality {
            q: Some(q),
            both_zero: false,
        }
    } else {
        Proportionality::none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, full_shift, graph_from_adjacency};
    use crate::matrix::int_matrix;
    use crate::{int, rat, ratio};

    fn pres(rows: &[&[i64]]) -> DimGroupPres {
        DimGroupPres::new(int_matrix(rows), Side::Stable).unwrap()
    }

    fn elem(v: &[i64], j: u32) -> DimElement {
        DimElement::new(v.iter().map(|&x| int(x)).collect(), j).unwrap()
    }

    #[test]
    fn presentation_from_graph() {
        let d = DimGroupPres::from_graph(&full_shift(2), Side::Stable).unwrap();
        assert_eq!(d.rank(), 1);
        assert_eq!(d.matrix(), &int_matrix(&[&[2]]));
        let u = DimGroupPres::from_graph(&cycle_graph(2), Side::Unstable).unwrap();
        assert_eq!(u.acting(), int_matrix(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn from_graph_requires_essential() {
        let g = crate::graph::Graph::new(
            vec!["a".into(), "b".into()],
            vec![("e".into(), "a".into(), "b".into())],
        )
        .unwrap();
        assert!(DimGroupPres::from_graph(&g, Side::Stable).is_err());
    }

    #[test]
    fn elem_equal_defining_relation() {
        let d = pres(&[&[2]]);
        assert!(d.elem_equal(&elem(&[1], 0), &elem(&[2], 1)).unwrap());
        assert!(!d.elem_equal(&elem(&[1], 0), &elem(&[1], 1)).unwrap());
    }

    #[test]
    fn elem_equal_with_kernel() {
        let d = pres(&[&[1, 1], &[0, 0]]);
        assert!(d.elem_equal(&elem(&[0, 1], 0), &elem(&[1, 0], 1)).unwrap());
    }

    #[test]
    fn elem_equal_exhaustive_defining_relation() {
        // [v, j] = [Av, j+1] for all small presentations and vectors.
        let presentations = [
            pres(&[&[2]]),
            pres(&[&[1, 1], &[1, 0]]),
            pres(&[&[0, 2], &[2, 0]]),
            pres(&[&[1, 1, 0], &[0, 0, 1], &[1, 0, 0]]),
        ];
        for d in &presentations {
            let r = d.rank();
            let mut v = vec![-3i64; r];
            'outer: loop {
                for j in 0..=3u32 {
                    let x = elem(&v, j);
                    let av = d.acting().mul_vec(&x.v);
                    let y = DimElement::new(av, j + 1).unwrap();
                    assert!(d.elem_equal(&x, &y).unwrap());
                }
                for slot in v.iter_mut() {
                    *slot += 1;
                    if *slot <= 3 {
                        continue 'outer;
                    }
                    *slot = -3;
                }
                break;
            }
        }
    }

    #[test]
    fn elem_equal_matches_bruteforce_oracle() {
        let d = pres(&[&[1, 1], &[0, 0]]);
        let m = d.acting();
        let vectors: Vec<Vec<Int>> = (-2..=2)
            .flat_map(|a| (-2..=2).map(move |b| vec![int(a), int(b)]))
            .collect();
        for x in &vectors {
            for y in &vectors {
                for jx in 0..=2u32 {
                    for jy in 0..=2u32 {
                        let ex = DimElement::new(x.clone(), jx).unwrap();
                        let ey = DimElement::new(y.clone(), jy).unwrap();
                        // Oracle: test A^m(A^{k-j} lo - hi) = 0 for all m <= 3 rank.
                        let (lo, hi) = if jx <= jy { (&ex, &ey) } else { (&ey, &ex) };
                        let lifted = m.pow(hi.j - lo.j).mul_vec(&lo.v);
                        let diff: Vec<Int> = lifted
                            .into_iter()
                            .zip(hi.v.iter())
                            .map(|(a, b)| a - b)
                            .collect();
                        let oracle = (0..=3 * d.rank() as u32).any(|mm| {
                            m.pow(mm)
                                .mul_vec(&diff)
                                .iter()
                                .all(num_traits::Zero::is_zero)
                        });
                        assert_eq!(d.elem_equal(&ex, &ey).unwrap(), oracle);
                    }
                }
            }
        }
    }

    #[test]
    fn hom_construction_and_rejection() {
        let d = pres(&[&[2]]);
        assert!(LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[3]]), 0).is_ok());
        let src = pres(&[&[0, 2], &[2, 0]]);
        let f = int_matrix(&[&[1, 1]]);
        assert!(LaggedHom::new(src.clone(), d.clone(), f, 0).is_ok());
        let bad = int_matrix(&[&[1, 0]]);
        assert_eq!(
            LaggedHom::new(src, d, bad, 0).unwrap_err(),
            DimensionError::NotIntertwining { row: 0, col: 0 }
        );
    }

    #[test]
    fn hom_equality_with_lag() {
        let d = pres(&[&[2]]);
        // (A, lag 1) is the identity map: [2v, j+1] = [v, j].
        let h1 = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[2]]), 1).unwrap();
        let h2 = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[1]]), 0).unwrap();
        assert!(h1.equal(&h2).unwrap());
        // Lag 1 with the identity matrix halves instead; not the identity.
        let half = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[1]]), 1).unwrap();
        assert!(!half.equal(&h2).unwrap());
        let h3 = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[1]]), 0).unwrap();
        let doubled = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[2]]), 0).unwrap();
        assert!(!h3.equal(&doubled).unwrap());
        assert!(h3.equal(&h3).unwrap());
    }

    #[test]
    fn hom_composition() {
        let d = pres(&[&[2]]);
        let h = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[3]]), 0).unwrap();
        let composed = LaggedHom::compose(&LaggedHom::identity(&d), &h).unwrap();
        assert!(composed.equal(&h).unwrap());
        let a = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[3]]), 0).unwrap();
        let b = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[2]]), 1).unwrap();
        let ab = LaggedHom::compose(&b, &a).unwrap();
        assert_eq!(ab.matrix(), &int_matrix(&[&[6]]));
        assert_eq!(ab.lag(), 1);
    }

    #[test]
    fn shift_automorphism_inverse_law() {
        for d in [pres(&[&[2]]), pres(&[&[1, 1], &[1, 0]]), pres(&[&[3]])] {
            let (forward, inverse) = shift_automorphisms(&d);
            let round = LaggedHom::compose(&inverse, &forward).unwrap();
            assert!(round.equal(&LaggedHom::identity(&d)).unwrap());
            let round2 = LaggedHom::compose(&forward, &inverse).unwrap();
            assert!(round2.equal(&LaggedHom::identity(&d)).unwrap());
        }
        // On (1,[3]) the inverse shift is multiplication by three.
        let (_, inverse) = shift_automorphisms(&pres(&[&[3]]));
        assert_eq!(inverse.matrix(), &int_matrix(&[&[3]]));
        assert_eq!(inverse.lag(), 0);
    }

    #[test]
    fn compose_rectangular_with_lag() {
        let d2 = pres(&[&[2]]);
        let src = pres(&[&[0, 2], &[2, 0]]);
        let row = LaggedHom::new(src, d2.clone(), int_matrix(&[&[1, 1]]), 0).unwrap();
        let doubled = LaggedHom::new(d2.clone(), d2, int_matrix(&[&[2]]), 1).unwrap();
        let composed = LaggedHom::compose(&doubled, &row).unwrap();
        assert_eq!(composed.matrix(), &int_matrix(&[&[2, 2]]));
        assert_eq!(composed.lag(), 1);
    }

    #[test]
    fn forward_shift_is_division_by_two() {
        // On (1,[2]) the class [1,1] is "1/2": applying forward to [1,0]
        // gives [1,1], and 2*[1,1] = [2,1] = [1,0].
        let d = pres(&[&[2]]);
        let (forward, _) = shift_automorphisms(&d);
        let image = forward.apply(&elem(&[1], 0)).unwrap();
        assert_eq!(image, elem(&[1], 1));
        let doubled = DimElement::new(vec![int(2)], 1).unwrap();
        assert!(d.elem_equal(&doubled, &elem(&[1], 0)).unwrap());
    }

    #[test]
    fn rationalized_maps() {
        let d = pres(&[&[2]]);
        let h = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[2]]), 1).unwrap();
        assert_eq!(h.rationalized(), RatMatrix::from_rows(vec![vec![rat(1)]]));
        let id = LaggedHom::identity(&pres(&[&[1, 1], &[1, 0]]));
        assert_eq!(id.rationalized(), RatMatrix::identity(2));
        // Source matrix is invertible (det -4), so its eventual range is all
        // of Q^2 with the standard basis; the rationalized map is then [1 1]
        // itself.
        let src = pres(&[&[0, 2], &[2, 0]]);
        let h2 = LaggedHom::new(src, d, int_matrix(&[&[1, 1]]), 0).unwrap();
        let m = h2.rationalized();
        assert_eq!(m, RatMatrix::from_rows(vec![vec![rat(1), rat(1)]]));
    }

    #[test]
    fn proportionality_examples() {
        let d = pres(&[&[2]]);
        let h2 = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[2]]), 0).unwrap();
        let h1 = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[1]]), 0).unwrap();
        let p = rationally_proportional(&h2, &h1).unwrap();
        assert_eq!(p.q, Some(rat(2)));
        let lagged = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[1]]), 1).unwrap();
        let p = rationally_proportional(&lagged, &h1).unwrap();
        assert_eq!(p.q, Some(ratio(1, 2)));
        let p = rationally_proportional(&h1, &h1).unwrap();
        assert_eq!(p.q, Some(rat(1)));
        assert!(!p.both_zero);
    }

    #[test]
    fn equal_homs_are_proportional_with_one() {
        let d = pres(&[&[2]]);
        let h1 = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[2]]), 1).unwrap();
        let h2 = LaggedHom::new(d.clone(), d.clone(), int_matrix(&[&[1]]), 0).unwrap();
        assert!(h1.equal(&h2).unwrap());
        assert_eq!(rationally_proportional(&h1, &h2).unwrap().q, Some(rat(1)));
    }

    #[test]
    fn both_zero_flagged() {
        // Nilpotent presentation: eventual range is trivial, all maps vanish.
        let d = DimGroupPres::new(int_matrix(&[&[0, 1], &[0, 0]]), Side::Stable).unwrap();
        let h = LaggedHom::new(d.clone(), d.clone(), d.acting(), 0).unwrap();
        let p = rationally_proportional(&h, &h).unwrap();
        assert!(p.both_zero);
        assert_eq!(p.q, Some(rat(1)));
    }

    #[test]
    fn normalization_for_display() {
        let d = pres(&[&[2]]);
        let x = elem(&[4], 2);
        assert_eq!(d.normalize_for_display(&x), elem(&[1], 0));
        // Odd numerator cannot be pulled below level 1.
        let y = elem(&[2], 1);
        assert_eq!(d.normalize_for_display(&y), elem(&[1], 0));
        let z = elem(&[3], 1);
        assert_eq!(d.normalize_for_display(&z), elem(&[3], 1));
    }

    #[test]
    fn positivity_predicate() {
        let d = pres(&[&[1, 1], &[1, 0]]);
        assert!(d.is_positive_presented(&elem(&[1, 0], 0)).unwrap());
        assert!(d.is_positive_presented(&elem(&[1, -1], 0)).unwrap());
        assert!(!d.is_positive_presented(&elem(&[-1, 0], 0)).unwrap());
    }

    #[test]
    fn compose_associative_up_to_equality() {
        let d2 = pres(&[&[2]]);
        let b = pres(&[&[0, 2], &[2, 0]]);
        let f = LaggedHom::new(b.clone(), d2.clone(), int_matrix(&[&[1, 1]]), 0).unwrap();
        let g = LaggedHom::new(d2.clone(), b.clone(), int_matrix(&[&[1], &[1]]), 0).unwrap();
        let h = LaggedHom::new(d2.clone(), d2.clone(), int_matrix(&[&[2]]), 1).unwrap();
        let left = LaggedHom::compose(&h, &LaggedHom::compose(&f, &g).unwrap()).unwrap();
        let right = LaggedHom::compose(&LaggedHom::compose(&h, &f).unwrap(), &g).unwrap();
        assert!(left.equal(&right).unwrap());
    }

    #[test]
    fn unstable_side_uses_transpose() {
        let g = graph_from_adjacency(&int_matrix(&[&[1, 2], &[1, 0]]));
        let du = DimGroupPres::from_graph(&g, Side::Unstable).unwrap();
        assert_eq!(du.acting(), int_matrix(&[&[1, 1], &[2, 0]]));
        // F must intertwine with the transposed matrices.
        let f = du.acting();
        assert!(LaggedHom::new(du.clone(), du.clone(), f, 0).is_ok());
    }

    #[test]
    fn level_cap_enforced() {
        assert!(DimElement::new(vec![int(1)], MAX_LEVEL).is_ok());
        assert_eq!(
            DimElement::new(vec![int(1)], MAX_LEVEL + 1).unwrap_err(),
            DimensionError::LevelOverflow
        );
    }

    #[test]
    fn element_serde() {
        let x = elem(&[1, -2], 3);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"v":["1","-2"],"j":3}"#);
        let back: DimElement = serde_json::from_str(&s).unwrap();
        assert_eq!(x, back);
    }
}
