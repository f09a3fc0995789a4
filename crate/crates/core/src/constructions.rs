//! Optimal radio labelings of `P_n □ Petersen` and `P_n □ K_m`.
//!
//! Both families are labeled by writing down an explicit vertex order and
//! applying the canonical increment recursion around a middle-column center.
//! Even `n` uses the two middle columns and meets the level bound exactly; odd
//! `n` uses the single middle column and needs one increment of `+1`, which is
//! optimal because the level bound is provably off by one there.

use std::fmt;
use std::str::FromStr;

use crate::distance::{distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{self, Coord, Family, Graph, Vertex};
use crate::labeling::{canonical_labeling, verify_radio, Labeling, Ordering};
use crate::levels::{decompose, lower_bound, LevelDecomposition};
use crate::perm::Permutation;
use crate::search::{search_ordering, SearchOptions, SearchOutcome, DEFAULT_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductFamily {
    PnPetersen,
    PnKm,
}

impl ProductFamily {
    pub fn graph_family(self) -> Family {
        match self {
            ProductFamily::PnPetersen => Family::PnPetersen,
            ProductFamily::PnKm => Family::PnKm,
        }
    }
}

impl fmt::Display for ProductFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.graph_family().fmt(f)
    }
}

impl FromStr for ProductFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Family>()? {
            Family::PnPetersen => Ok(ProductFamily::PnPetersen),
            Family::PnKm => Ok(ProductFamily::PnKm),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SchemeResult {
    pub family: ProductFamily,
    pub n: usize,
    /// Size of the second factor: 10 for Petersen, `m` for `K_m`.
    pub m: usize,
    pub graph: Graph,
    pub ordering: Ordering,
    pub labeling: Labeling,
    pub claimed_span: u64,
    pub center: Vec<Vertex>,
    /// `(index, extra)`: the increment into `x_index` is canonical + extra.
    pub jumps: Jumps,
    /// True when the closed-form order failed verification and the order came
    /// from [`search_ordering`] instead.
    pub from_search: bool,
}

impl SchemeResult {
    pub fn decomposition(&self, dm: &DistanceMatrix) -> LevelDecomposition {
        decompose(&self.graph, dm, &self.center).expect("scheme centers are valid")
    }
}

/// Middle column for odd `n`, the two middle columns for even `n`.
pub fn middle_center(g: &Graph) -> Vec<Vertex> {
    let (n, _) = g.grid().expect("product graph");
    let mut c = if n.is_multiple_of(2) {
        let mut c = g.column(n / 2);
        c.extend(g.column(n / 2 + 1));
        c
    } else {
        g.column(n.div_ceil(2))
    };
    c.sort_unstable();
    c
}

/// The radio number of the family member, in closed form.
pub fn closed_form_span(family: ProductFamily, n: usize, m: usize) -> u64 {
    let (n, m) = (n as u64, m as u64);
    match family {
        ProductFamily::PnPetersen if n % 2 == 0 => 5 * n * n - n + 1,
        ProductFamily::PnPetersen => 5 * n * n - n + 6,
        ProductFamily::PnKm if n % 2 == 0 => (m * n * n - 2 * n + 2) / 2,
        ProductFamily::PnKm => (m * n * n - 2 * n + m + 2) / 2,
    }
}

fn perm(images: [usize; 10]) -> Permutation {
    Permutation::from_one_line(&images).expect("static permutation")
}

/// `(index, extra)` pairs; see [`SchemeResult::jumps`].
pub type Jumps = Vec<(usize, u64)>;

/// Position in the order of vertex `(i, j)`.
type Placement = dyn Fn(usize, usize) -> usize;

fn order_from_positions(g: &Graph, position: &Placement) -> Result<Ordering> {
    let p = g.order();
    let mut seq = vec![usize::MAX; p];
    for v in 0..p {
        let (i, j) = g.coord(v).expect("product graph");
        let t = position(i, j);
        if t >= p || seq[t] != usize::MAX {
            return Err(Error::NotAPermutation(format!("position {t} for ({i},{j})")));
        }
        seq[t] = v;
    }
    Ordering::new(seq, p)
}

/// Order for `P_n □ Petersen` together with its jumps.
fn petersen_order(g: &Graph, n: usize) -> Result<(Ordering, Jumps)> {
    if n.is_multiple_of(2) {
        let alpha = perm([1, 8, 3, 7, 2, 10, 5, 4, 6, 9]);
        let beta = perm([9, 1, 10, 3, 7, 2, 4, 6, 5, 8]);
        let sigma = perm([2, 9, 1, 8, 3, 7, 6, 5, 4, 10]);
        let tau = perm([7, 2, 8, 1, 10, 3, 5, 4, 6, 9]);
        let half = n / 2;
        let position = move |i: usize, j: usize| {
            if i <= half {
                let pi = if (half - i).is_multiple_of(2) { &alpha } else { &beta };
                let s = pi.apply(j);
                (half - i) * 20 + 2 * (s - 1)
            } else {
                let pi = if (n - i).is_multiple_of(2) { &sigma } else { &tau };
                let s = pi.apply(j);
                (n - i) * 20 + 2 * s - 1
            }
        };
        return Ok((order_from_positions(g, &position)?, Vec::new()));
    }

    let c = n.div_ceil(2);
    let odd = OddPetersen::for_n(n);
    // Column i uses σ^e ∘ base with e running up along the visiting order
    // R_n, L_{c-1}, R_{n-1}, L_{c-2}, ...
    let columns: Vec<Permutation> = (0..=n)
        .map(|i| {
            let step = match i.cmp(&c) {
                std::cmp::Ordering::Greater => 2 * (n - i) as i64,
                std::cmp::Ordering::Less if i > 0 => 2 * (c - i) as i64 - 1,
                _ => return odd.center.clone(),
            };
            odd.sigma.pow(odd.offset + step).compose(&odd.base)
        })
        .collect();
    let split = odd.split;
    let position = move |i: usize, j: usize| odd_round_position(n, c, i, columns[i].apply(j), split);
    Ok((order_from_positions(g, &position)?, vec![(odd.jump_index(n), 1)]))
}

/// Parameters of the odd-`n` Petersen order. Both `σ` have order 12, so they
/// depend on `n mod 12`.
struct OddPetersen {
    base: Permutation,
    sigma: Permutation,
    center: Permutation,
    offset: i64,
    /// Rounds `1..=split` start on the center column, the rest end on it.
    split: usize,
}

impl OddPetersen {
    fn for_n(n: usize) -> Self {
        if n % 4 == 1 {
            let (center, offset) = match n % 12 {
                5 => ([1, 4, 3, 6, 2, 7, 9, 8, 10, 5], 0),
                9 => ([8, 1, 7, 5, 9, 6, 2, 10, 3, 4], 1),
                _ => ([1, 3, 6, 8, 4, 9, 2, 10, 7, 5], 0),
            };
            OddPetersen {
                base: perm([2, 7, 1, 5, 3, 6, 8, 10, 9, 4]),
                sigma: perm([2, 3, 1, 7, 4, 5, 6, 9, 10, 8]),
                center: perm(center),
                offset,
                split: 7,
            }
        } else {
            let center = match n % 12 {
                7 => [1, 7, 2, 9, 3, 8, 5, 6, 4, 10],
                11 => [1, 6, 4, 9, 7, 5, 10, 2, 8, 3],
                _ => [1, 5, 7, 9, 6, 4, 3, 2, 8, 10],
            };
            OddPetersen {
                base: perm([1, 7, 2, 9, 3, 8, 5, 6, 4, 10]),
                sigma: perm([3, 1, 2, 6, 4, 5, 8, 9, 10, 7]),
                center: perm(center),
                offset: 1,
                split: 9,
            }
        }
    }

    /// Position whose incoming increment carries the `+1`: the first vertex
    /// of round `split + 1`.
    fn jump_index(&self, n: usize) -> usize {
        n * self.split
    }
}

/// Position of column `r`, round `s` in the odd layout: rounds `1..=split`
/// start on the center column, later rounds end on it.
fn odd_round_position(n: usize, c: usize, r: usize, s: usize, split: usize) -> usize {
    let round = n * (s - 1);
    if s <= split {
        if r <= c {
            (n + 1 - 2 * r) + round
        } else {
            2 * (n - r) + round + 1
        }
    } else if r < c {
        (n + 1 - 2 * r) + round - 1
    } else if r > c {
        2 * (n - r) + round
    } else {
        n * s - 1
    }
}

/// Order for `P_n □ K_m` together with its jumps.
///
/// Even `n`: alternate the two halves block by block as in the Petersen case;
/// the right half's `K_m` coordinate is the left one's shifted by 2, so
/// neighbours in the order never share a coordinate.
///
/// Odd `n`: `m - 1` rounds that start on the center column and a final round
/// that ends on it. Each column walks the `K_m` coordinates cyclically from a
/// column-specific offset chosen so that the one tight increment at the
/// start of the last round clears every nearby pair.
fn km_order(g: &Graph, n: usize, m: usize) -> Result<(Ordering, Jumps)> {
    const RIGHT_SHIFT: usize = 2;
    if n.is_multiple_of(2) {
        let half = n / 2;
        let position = move |i: usize, j: usize| {
            if i <= half {
                (half - i) * 2 * m + 2 * (j - 1)
            } else {
                let s = (j - 1 + m - RIGHT_SHIFT % m) % m + 1;
                (n - i) * 2 * m + 2 * s - 1
            }
        };
        return Ok((order_from_positions(g, &position)?, Vec::new()));
    }
    let c = n.div_ceil(2);
    let offset = move |r: usize| -> usize {
        if r == c {
            0
        } else if r == n || r == 1 {
            2
        } else if r > c {
            1
        } else {
            0
        }
    };
    let position = move |i: usize, j: usize| {
        // j = (s - 1 + offset) mod m + 1
        let s = (j - 1 + m - offset(i) % m) % m + 1;
        odd_round_position(n, c, i, s, m - 1)
    };
    Ok((order_from_positions(g, &position)?, vec![(n * m - n, 1)]))
}

fn finish_scheme(
    family: ProductFamily,
    n: usize,
    m: usize,
    g: Graph,
    ordering: Ordering,
    jumps: Jumps,
) -> Result<SchemeResult> {
    let dm = distances(&g);
    let center = middle_center(&g);
    let dec = decompose(&g, &dm, &center)?;
    let target = closed_form_span(family, n, m);
    let candidate = canonical_labeling(&g, &dm, &dec, &ordering, &jumps)
        .ok()
        .filter(|lab| lab.span() == target && verify_radio(&g, &dm, lab).is_ok_and(|r| r.valid));
    if let Some(labeling) = candidate {
        return Ok(SchemeResult {
            family,
            n,
            m,
            graph: g,
            ordering,
            labeling,
            claimed_span: target,
            center,
            jumps,
            from_search: false,
        });
    }
    let opts = SearchOptions::new(target as i64)
        .max_jumps(jumps.len())
        .budget(DEFAULT_BUDGET);
    match search_ordering(&g, &dm, &dec, opts)? {
        SearchOutcome::Found(found) if verify_radio(&g, &dm, &found.labeling)?.valid => Ok(SchemeResult {
            family,
            n,
            m,
            graph: g,
            ordering: found.ordering,
            claimed_span: found.labeling.span(),
            labeling: found.labeling,
            center,
            jumps: found.jumps,
            from_search: true,
        }),
        _ => Err(Error::ConstructionFailed {
            family: family.to_string(),
            span: target as i64,
        }),
    }
}

/// The closed-form order and jumps for a family member, before any
/// verification or search fallback.
pub fn scheme_order(family: ProductFamily, n: usize, m: usize) -> Result<(Graph, Ordering, Jumps)> {
    let (g, (ord, jumps)) = match family {
        ProductFamily::PnPetersen => {
            let g = graph::generate(Family::PnPetersen, &[n as i64])?;
            let o = petersen_order(&g, n)?;
            (g, o)
        }
        ProductFamily::PnKm => {
            let g = graph::generate(Family::PnKm, &[n as i64, m as i64])?;
            let o = km_order(&g, n, m)?;
            (g, o)
        }
    };
    Ok((g, ord, jumps))
}

/// Optimal radio labeling of `P_n □ Petersen`, `n >= 3`.
pub fn construct_pn_petersen(n: usize) -> Result<SchemeResult> {
    if n < 3 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            expected: "n >= 3",
        });
    }
    let g = graph::generate(Family::PnPetersen, &[n as i64])?;
    let (ordering, jumps) = petersen_order(&g, n)?;
    finish_scheme(ProductFamily::PnPetersen, n, 10, g, ordering, jumps)
}

/// Optimal radio labeling of `P_n □ K_m`, `n >= 4`, `m >= 3`.
pub fn construct_pn_km(n: usize, m: usize) -> Result<SchemeResult> {
    if n < 4 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: n as i64,
            expected: "n >= 4",
        });
    }
    if m < 3 {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m as i64,
            expected: "m >= 3",
        });
    }
    let g = graph::generate(Family::PnKm, &[n as i64, m as i64])?;
    let (ordering, jumps) = km_order(&g, n, m)?;
    finish_scheme(ProductFamily::PnKm, n, m, g, ordering, jumps)
}

pub fn construct(family: ProductFamily, n: usize, m: Option<usize>) -> Result<SchemeResult> {
    match family {
        ProductFamily::PnPetersen => construct_pn_petersen(n),
        ProductFamily::PnKm => construct_pn_km(
            n,
            m.ok_or(Error::InvalidParameter {
                name: "m",
                value: 0,
                expected: "m >= 3 (parameter missing)",
            })?,
        ),
    }
}

/// For odd `n`, the level bound of the middle-column center is never attained
/// on these two families: the two extreme columns cannot both be visited
/// between tight increments. The radio number is therefore at least one more.
pub fn improved_odd_bound(family: ProductFamily, n: usize, m: Option<usize>) -> Result<i64> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenN("improved_odd_bound"));
    }
    let g = match family {
        ProductFamily::PnPetersen => {
            if n < 3 {
                return Err(Error::InvalidParameter {
                    name: "n",
                    value: n as i64,
                    expected: "odd n >= 3",
                });
            }
            graph::generate(Family::PnPetersen, &[n as i64])?
        }
        ProductFamily::PnKm => {
            let m = m.unwrap_or(0);
            if n < 5 {
                return Err(Error::InvalidParameter {
                    name: "n",
                    value: n as i64,
                    expected: "odd n >= 5",
                });
            }
            if m < 3 {
                return Err(Error::InvalidParameter {
                    name: "m",
                    value: m as i64,
                    expected: "m >= 3",
                });
            }
            graph::generate(Family::PnKm, &[n as i64, m as i64])?
        }
    };
    let dm = distances(&g);
    let dec = decompose(&g, &dm, &middle_center(&g))?;
    Ok(lower_bound(&g, &dm, &dec).bound + 1)
}

/// Coordinate of each position in the order.
pub fn ordering_coords(result: &SchemeResult) -> Vec<Coord> {
    result
        .ordering
        .as_slice()
        .iter()
        .map(|&v| result.graph.coord(v).expect("product graph"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::check_theorem2;

    fn label_at(r: &SchemeResult, i: usize, j: usize) -> (usize, u64) {
        let v = r.graph.vertex_at((i, j)).unwrap();
        (r.ordering.positions()[v], r.labeling.label(v))
    }

    #[test]
    fn p6_petersen_spot_cells() {
        let r = construct_pn_petersen(6).unwrap();
        assert!(!r.from_search);
        assert_eq!(r.labeling.span(), 175);
        assert_eq!(label_at(&r, 3, 1), (0, 0));
        assert_eq!(label_at(&r, 6, 3), (1, 3));
        assert_eq!(label_at(&r, 3, 2), (14, 42));
        assert_eq!(label_at(&r, 4, 10), (59, 175));
    }

    #[test]
    fn p5_petersen_jump() {
        let r = construct_pn_petersen(5).unwrap();
        assert!(!r.from_search);
        assert_eq!(r.jumps, vec![(35, 1)]);
        assert_eq!(label_at(&r, 1, 6), (34, 88));
        assert_eq!(label_at(&r, 5, 7), (35, 90));
        assert_eq!(r.labeling.span(), 126);
    }

    #[test]
    fn p7_petersen_jump() {
        let r = construct_pn_petersen(7).unwrap();
        assert!(!r.from_search);
        assert_eq!(label_at(&r, 1, 2), (62, 221));
        assert_eq!(label_at(&r, 7, 4), (63, 223));
        assert_eq!(r.labeling.span(), 244);
    }

    #[test]
    fn odd_petersen_orders_close_up_for_every_residue() {
        for n in (3..=27).step_by(2) {
            let r = construct_pn_petersen(n).unwrap();
            assert!(!r.from_search, "n = {n}");
            assert_eq!(r.labeling.span(), closed_form_span(ProductFamily::PnPetersen, n, 10));
            let want = if n % 4 == 1 { 7 * n } else { 9 * n };
            assert_eq!(r.jumps, vec![(want, 1)]);
        }
    }

    #[test]
    fn p4_petersen() {
        let r = construct_pn_petersen(4).unwrap();
        assert_eq!(r.labeling.span(), 77);
        let dm = distances(&r.graph);
        assert!(verify_radio(&r.graph, &dm, &r.labeling).unwrap().valid);
    }

    #[test]
    fn km_small_cases() {
        for (n, m, span) in [(4, 3, 21), (5, 3, 35), (6, 4, 67)] {
            let r = construct_pn_km(n, m).unwrap();
            assert!(!r.from_search, "({n},{m}) needed the search fallback");
            assert_eq!(r.labeling.span(), span);
            let dm = distances(&r.graph);
            assert!(verify_radio(&r.graph, &dm, &r.labeling).unwrap().valid);
        }
    }

    #[test]
    fn odd_km_jump_sits_one_round_before_the_end() {
        let r = construct_pn_km(7, 4).unwrap();
        assert_eq!(r.jumps, vec![(28 - 7, 1)]);
        let dm = distances(&r.graph);
        let rep = check_theorem2(&r.graph, &dm, &r.decomposition(&dm), &r.labeling).unwrap();
        assert!(rep.cond_a_failures.is_empty() && rep.cond_b_ok);
        assert_eq!(rep.cond_c_failures.len(), 1);
    }

    #[test]
    fn parameter_ranges() {
        assert!(matches!(construct_pn_petersen(2), Err(Error::InvalidParameter { .. })));
        assert!(matches!(construct_pn_km(3, 3), Err(Error::InvalidParameter { .. })));
        assert!(matches!(construct_pn_km(4, 2), Err(Error::InvalidParameter { .. })));
    }

    #[test]
    fn improved_bounds() {
        assert_eq!(improved_odd_bound(ProductFamily::PnPetersen, 5, None), Ok(126));
        assert_eq!(improved_odd_bound(ProductFamily::PnPetersen, 7, None), Ok(244));
        assert_eq!(improved_odd_bound(ProductFamily::PnKm, 5, Some(3)), Ok(35));
        assert!(matches!(
            improved_odd_bound(ProductFamily::PnPetersen, 6, None),
            Err(Error::EvenN(_))
        ));
    }
}
