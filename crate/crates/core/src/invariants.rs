//! Zeta functions and periodic-point data of edge shifts, the Kronecker
//! product consistency checks for product shifts, and the bundled
//! invariant report.

use serde::Serialize;

use crate::graph::{period, product_graph, Graph};
use crate::linalg::{
    charpoly, eventual_range, isolate_max_real_root, rational_canonical_form, refine_to_width,
    LinalgError,
};
use crate::{Int, IntMatrix, IntPoly, Poly, Rat, RatMatrix, RatPoly};

/// `1 / det(I - tA)`, stored exactly as a rational function. The
/// denominator has constant term 1 and degree at most the rank of `A`;
/// nilpotent directions contribute nothing, so this also equals
/// `1 / det(I - tA^×)` on the eventual range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaFunction {
    denominator: RatPoly,
}

impl ZetaFunction {
    pub fn numerator(&self) -> RatPoly {
        Poly::one()
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.denominator
    }
}

impl Serialize for ZetaFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("ZetaFunction", 2)?;
        s.serialize_field("numerator", &self.numerator())?;
        s.serialize_field("denominator", &self.denominator)?;
        s.end()
    }
}

/// `det(I - tA)`: the reversed characteristic polynomial.
fn det_one_minus_ta(a: &IntMatrix) -> IntPoly {
    let p = charpoly(a).expect("adjacency is square");
    let r = a.rows();
    let mut coeffs = vec![Int::from(0); r + 1];
    for k in 0..=r {
        coeffs[r - k] = p.coeff(k);
    }
    Poly::new(coeffs)
}

/// Zeta function of the edge shift of an essential graph.
pub fn zeta(g: &Graph) -> ZetaFunction {
    ZetaFunction {
        denominator: det_one_minus_ta(&g.adjacency()).to_rational(),
    }
}

/// `trace(A^n)` for `n = 1..=n_max`: the periodic-point counts.
pub fn periodic_counts(g: &Graph, n_max: u32) -> Vec<Int> {
    let a = g.adjacency();
    let mut power = a.clone();
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        out.push(power.trace());
        if n < n_max {
            power = power.mul(&a);
        }
    }
    out
}

/// Expands `log zeta` as a formal power series and compares it with
/// `Σ trace(A^n)/n t^n` through the requested order, exactly.
pub fn zeta_series_check(g: &Graph, order: u32) -> bool {
    assert!(order <= 32, "series order capped at 32");
    zeta_series_matches(&zeta(g), &periodic_counts(g, order), order)
}

/// The comparison underneath `zeta_series_check`, against explicitly given
/// periodic-point counts.
pub fn zeta_series_matches(z: &ZetaFunction, counts: &[Int], order: u32) -> bool {
    assert!(order <= 32, "series order capped at 32");
    assert!(counts.len() >= order as usize);
    let order = order as usize;
    let den = z.denominator().clone();
    // u = den - 1 has zero constant term.
    let mut u = vec![Rat::from_integer(Int::from(0)); order + 1];
    for k in 1..=order {
        u[k] = den.coeff(k);
    }
    // log(1/den) = -log(1+u) = -Σ_{k>=1} (-1)^{k+1} u^k / k.
    let mut log_series = vec![Rat::from_integer(Int::from(0)); order + 1];
    let mut u_pow = vec![Rat::from_integer(Int::from(0)); order + 1];
    u_pow[0] = crate::rat(1);
    for k in 1..=order {
        u_pow = series_mul(&u_pow, &u, order);
        let sign = if k % 2 == 1 { crate::rat(-1) } else { crate::rat(1) };
        let factor = sign / crate::rat(k as i64);
        for (c, up) in log_series.iter_mut().zip(u_pow.iter()) {
            *c += factor.clone() * up.clone();
        }
    }
    for n in 1..=order {
        let expected = Rat::new(counts[n - 1].clone(), Int::from(n as i64));
        if log_series[n] != expected {
            return false;
        }
    }
    true
}

fn series_mul(a: &[Rat], b: &[Rat], order: usize) -> Vec<Rat> {
    let mut out = vec![Rat::from_integer(Int::from(0)); order + 1];
    for (i, ai) in a.iter().enumerate() {
        if num_traits::Zero::is_zero(ai) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > order {
                break;
            }
            out[i + j] += ai.clone() * bj.clone();
        }
    }
    out
}

/// The three product-shift consistency checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KunnethReport {
    /// Adjacency of the product graph equals the Kronecker product.
    pub adjacency_matches: bool,
    pub range_dim_left: usize,
    pub range_dim_right: usize,
    pub range_dim_product: usize,
    /// Eventual-range dimensions multiply.
    pub range_dims_multiply: bool,
    /// Rational canonical form of the product's invertible part matches the
    /// Kronecker product of the invertible parts.
    pub invertible_parts_match: bool,
}

impl KunnethReport {
    pub fn all(&self) -> bool {
        self.adjacency_matches && self.range_dims_multiply && self.invertible_parts_match
    }
}

pub fn kunneth_check(g: &Graph, h: &Graph) -> KunnethReport {
    let a = g.adjacency();
    let b = h.adjacency();
    let product = product_graph(g, h);
    let kron = a.kron(&b);
    let adjacency_matches = product.adjacency() == kron;

    let er_a = eventual_range(&a).expect("square");
    let er_b = eventual_range(&b).expect("square");
    let er_ab = eventual_range(&kron).expect("square");
    let range_dims_multiply = er_ab.dim() == er_a.dim() * er_b.dim();

    let restricted_kron = er_a.a_times.kron(&er_b.a_times);
    let invertible_parts_match = rational_canonical_form(&restricted_kron) == er_ab.rcf;
    KunnethReport {
        adjacency_matches,
        range_dim_left: er_a.dim(),
        range_dim_right: er_b.dim(),
        range_dim_product: er_ab.dim(),
        range_dims_multiply,
        invertible_parts_match,
    }
}

/// Bundle of the computable invariants of one edge shift.
#[derive(Debug, Clone, Serialize)]
pub struct InvariantReport {
    /// Distinguished marker for the empty shift.
    pub empty: bool,
    pub vertices: usize,
    pub edges: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub adjacency: Option<IntMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<u64>,
    /// Walk lengths `n ≤ 2|G⁰|` carrying a closed walk; their gcd is the
    /// period.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period_witness_lengths: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub charpoly: Option<IntPoly>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perron_interval: Option<PerronIntervalReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eventual_range_dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invertible_part: Option<RatMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub invertible_part_rcf: Option<RatMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ZetaFunction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub periodic_counts: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PerronIntervalReport {
    pub lo: String,
    pub hi: String,
    pub width: String,
}

/// Gathers the full report; the Perron interval is refined below the
/// requested width.
pub fn invariant_report(g: &Graph, perron_width: &Rat) -> Result<InvariantReport, LinalgError> {
    if g.is_empty() {
        return Ok(InvariantReport {
            empty: true,
            vertices: 0,
            edges: 0,
            adjacency: None,
            irreducible: None,
            period: None,
            period_witness_lengths: None,
            charpoly: None,
            perron_interval: None,
            eventual_range_dim: None,
            invertible_part: None,
            invertible_part_rcf: None,
            zeta: None,
            periodic_counts: None,
        });
    }
    let a = g.adjacency();
    let p = charpoly(&a)?;
    let counts = periodic_counts(g, 2 * g.vertex_count() as u32);
    let witness_lengths: Vec<u64> = counts
        .iter()
        .enumerate()
        .filter(|(_, c)| num_traits::Signed::is_positive(*c))
        .map(|(i, _)| (i + 1) as u64)
        .collect();
    let mut interval = isolate_max_real_root(&p.to_rational())?;
    refine_to_width(&mut interval, perron_width)?;
    let er = eventual_range(&a)?;
    Ok(InvariantReport {
        empty: false,
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        adjacency: Some(a),
        irreducible: Some(g.is_irreducible()),
        period: Some(period(g).expect("essential graph has a cycle")),
        period_witness_lengths: Some(witness_lengths),
        charpoly: Some(p),
        perron_interval: Some(PerronIntervalReport {
            lo: interval.lo.to_string(),
            hi: interval.hi.to_string(),
            width: interval.width().to_string(),
        }),
        eventual_range_dim: Some(er.dim()),
        invertible_part: Some(er.a_times),
        invertible_part_rcf: Some(er.rcf),
        zeta: Some(zeta(g)),
        periodic_counts: Some(
            periodic_counts(g, 10)
                .iter()
                .map(Int::to_string)
                .collect(),
        ),
    })
}

/// Brute-force closed-walk count by walk enumeration, used as the oracle
/// for `periodic_counts` in tests and the acceptance suite.
pub fn count_closed_walks(g: &Graph, n: u32) -> Int {
    let mut total = Int::from(0);
    for start in 0..g.vertex_count() {
        let mut stack = vec![(start, 0u32)];
        while let Some((v, depth)) = stack.pop() {
            if depth == n {
                if v == start {
                    total += Int::from(1);
                }
                continue;
            }
            for &e in g.out_edges(v) {
                stack.push((g.edges()[e].dst, depth + 1));
            }
        }
    }
    total
}
