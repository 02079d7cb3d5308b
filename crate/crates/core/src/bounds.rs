//! Closed-form bounds on the frugal chromatic and independence numbers, the Nordhaus-Gaddum
//! analysis of a graph against its complement, and membership in the equality family `Psi_t`.

use crate::check::VertexSet;
use crate::error::{Error, Result};
use crate::exact::{chi2_exact, chi_injective_exact, chi_t_frugal_exact, find_t_frugal_coloring, Outcome, SolveBudget};
use crate::graph::generators::{ng_exceptional, ng_fingerprint, NgFingerprint};
use crate::graph::structure::{clique_number, is_triangle_free};
use crate::graph::{pendant_stats, Graph, ProductKind};
use crate::tree::alpha_t_frugal_tree;
use crate::Frugality;
use serde::Serialize;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
    /// The quantity is determined outright.
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundTarget {
    ChiFrugal,
    AlphaFrugal,
    NgSum,
}

/// One bound. `value_num / value_den` is exact when the bound is rational; a bound involving a
/// square root stores a rational rounded toward the safe side at six decimals, while `rounded`
/// is always the exact integer ceiling (lower bounds) or floor (upper bounds).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: BoundKind,
    pub target: BoundTarget,
    pub value_num: u128,
    pub value_den: u128,
    pub rounded: Option<u128>,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub inputs_used: Vec<String>,
}

impl BoundEntry {
    fn new(name: &str, kind: BoundKind, target: BoundTarget, num: u128, den: u128, inputs: Vec<String>) -> Self {
        let g = gcd(num, den).max(1);
        let (num, den) = (num / g, den / g);
        let rounded = match kind {
            BoundKind::Lower => num.div_ceil(den),
            _ => num / den,
        };
        BoundEntry {
            name: name.into(),
            kind,
            target,
            value_num: num,
            value_den: den,
            rounded: Some(rounded),
            applicable: true,
            reason: None,
            inputs_used: inputs,
        }
    }

    fn int(name: &str, kind: BoundKind, target: BoundTarget, v: u128, inputs: Vec<String>) -> Self {
        Self::new(name, kind, target, v, 1, inputs)
    }

    fn skipped(name: &str, kind: BoundKind, target: BoundTarget, reason: &str) -> Self {
        BoundEntry {
            name: name.into(),
            kind,
            target,
            value_num: 0,
            value_den: 1,
            rounded: None,
            applicable: false,
            reason: Some(reason.into()),
            inputs_used: Vec::new(),
        }
    }

    pub fn value(&self) -> f64 {
        self.value_num as f64 / self.value_den as f64
    }

    /// Whether `x` is consistent with this entry; inapplicable entries accept anything.
    pub fn admits(&self, x: usize) -> bool {
        let x = x as u128;
        match (self.applicable, self.kind) {
            (false, _) => true,
            (true, BoundKind::Lower) => self.rounded.is_some_and(|r| r <= x),
            (true, BoundKind::Upper) => self.rounded.is_some_and(|r| x <= r),
            (true, BoundKind::Exact) => self.value_den == 1 && self.value_num == x,
        }
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Exact values the caller already knows; they replace surrogates where a bound needs them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Known {
    pub chi: Option<usize>,
    pub alpha: Option<usize>,
}

/// Every bound on `chi_t^f` and `alpha_t^f` of `g` together with the Nordhaus-Gaddum sum bounds.
pub fn bounds_report(g: &Graph, t: Frugality, known: Known) -> Vec<BoundEntry> {
    use BoundKind::*;
    use BoundTarget::*;
    let n = g.n() as u128;
    let m = g.m() as u128;
    let delta = g.max_degree() as u128;
    let tt = t.get() as u128;
    let two = t.get() == 2;
    let mut out = Vec::new();

    if n == 0 {
        out.push(BoundEntry::int("clique_degree_lower", Lower, ChiFrugal, 0, vec![]));
    } else {
        let omega = clique_number(g) as u128;
        let v = omega.max(delta.div_ceil(tt) + 1);
        out.push(BoundEntry::int("clique_degree_lower", Lower, ChiFrugal, v, vec![format!("omega={omega}"), format!("max_degree={delta}")]));
    }
    let greedy = if n == 0 { 0 } else { 1 + delta * (1 + delta.saturating_sub(1) / tt) };
    out.push(BoundEntry::int("greedy_upper", Upper, ChiFrugal, greedy, vec![format!("max_degree={delta}")]));

    let tree_alpha = g.is_tree().then(|| alpha_t_frugal_tree(g, t).expect("checked tree").0);
    let pendant = pendant_entries(g, two);
    let cubic = cubic_entries(g, two);

    // Upper bound on alpha for the ratio bound, which decreases in alpha.
    let (alpha_hi, alpha_hi_src) = if let Some(a) = known.alpha {
        (a as u128, "alpha=known".to_string())
    } else if let Some(a) = tree_alpha {
        (a as u128, "alpha=tree_exact".into())
    } else {
        let mut best = (n, "alpha<=n".to_string());
        for e in pendant.iter().chain(&cubic).filter(|e| e.applicable && e.kind != Lower) {
            let r = e.rounded.expect("applicable");
            if r < best.0 {
                best = (r, format!("alpha<={}", e.name));
            }
        }
        best
    };
    if n == 0 {
        out.push(BoundEntry::skipped("alpha_ratio_lower", Lower, ChiFrugal, "empty graph"));
    } else {
        out.push(ratio_bound(m, tt, alpha_hi, vec![format!("m={m}"), alpha_hi_src]));
    }

    out.extend(pendant);
    out.extend(cubic.iter().cloned());

    // Lower bound on alpha for the triangle-free bound, which decreases in alpha.
    if !two {
        out.push(BoundEntry::skipped("triangle_free_upper", Upper, ChiFrugal, "requires t = 2"));
    } else if !is_triangle_free(g) {
        out.push(BoundEntry::skipped("triangle_free_upper", Upper, ChiFrugal, "graph has a triangle"));
    } else {
        let (alpha_lo, src) = if let Some(a) = known.alpha {
            (a as u128, "alpha=known".to_string())
        } else if let Some(a) = tree_alpha {
            (a as u128, "alpha=tree_exact".into())
        } else {
            let mut best = (greedy_frugal_set(g, t).len() as u128, "alpha>=greedy_set".to_string());
            if let Some(chi) = known.chi.filter(|&c| c > 0) {
                let v = n.div_ceil(chi as u128);
                if v > best.0 {
                    best = (v, "alpha>=n/chi_known".into());
                }
            }
            if let Some(e) = cubic.iter().find(|e| e.applicable && e.kind == Lower) {
                let v = e.rounded.expect("applicable");
                if v > best.0 {
                    best = (v, "alpha>=cubic_alpha_lower".into());
                }
            }
            best
        };
        let v = (n + 4).saturating_sub(alpha_lo) / 2;
        out.push(BoundEntry::int("triangle_free_upper", Upper, ChiFrugal, v, vec![format!("n={n}"), src]));
    }

    if !two || n < 2 {
        let why = if two { "requires at least two vertices" } else { "requires t = 2" };
        out.push(BoundEntry::skipped("ng_lower", Lower, NgSum, why));
        out.push(BoundEntry::skipped("ng_upper", Upper, NgSum, why));
    } else {
        if is_ng_exceptional(g) {
            out.push(BoundEntry::skipped("ng_lower", Lower, NgSum, "one of the six exceptional 9-vertex graphs"));
        } else {
            out.push(BoundEntry::new("ng_lower", Lower, NgSum, n + 4, 2, vec![format!("n={n}")]));
        }
        out.push(BoundEntry::new("ng_upper", Upper, NgSum, 3 * n, 2, vec![format!("n={n}")]));
    }
    out
}

/// `1/2 + sqrt(1/4 + 2m / (t alpha))`, written as `(1 + sqrt(N / M)) / 2` with `M = t alpha` and
/// `N = M + 8m`.
fn ratio_bound(m: u128, t: u128, alpha: u128, inputs: Vec<String>) -> BoundEntry {
    if alpha == 0 {
        return BoundEntry::skipped("alpha_ratio_lower", BoundKind::Lower, BoundTarget::ChiFrugal, "alpha is zero");
    }
    let big_m = t * alpha;
    let big_n = big_m + 8 * m;
    let root = isqrt(big_n * big_m);
    let mut e = if root * root == big_n * big_m {
        BoundEntry::new("alpha_ratio_lower", BoundKind::Lower, BoundTarget::ChiFrugal, big_m + root, 2 * big_m, inputs)
    } else {
        const SCALE: u128 = 1_000_000;
        let lo = isqrt(big_n * big_m * SCALE * SCALE);
        BoundEntry::new("alpha_ratio_lower", BoundKind::Lower, BoundTarget::ChiFrugal, big_m * SCALE + lo, 2 * big_m * SCALE, inputs)
    };
    // Least k with k >= (1 + sqrt(N/M)) / 2, that is (2k - 1)^2 M >= N.
    let k = (1u128..).find(|&k| (2 * k - 1) * (2 * k - 1) * big_m >= big_n).expect("unbounded search");
    e.rounded = Some(k);
    e
}

fn pendant_entries(g: &Graph, two: bool) -> Vec<BoundEntry> {
    use BoundKind::*;
    use BoundTarget::AlphaFrugal;
    let skip = |why: &str| vec![BoundEntry::skipped("pendant_upper", Upper, AlphaFrugal, why)];
    if !two {
        return skip("requires t = 2");
    }
    if g.n() < 2 {
        return skip("requires at least two vertices");
    }
    // A K2 component makes both ends pendant and support at once, outside the counting argument.
    if (0..g.n()).any(|v| g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 1) {
        return skip("has a K2 component");
    }
    let ps = pendant_stats(g);
    let (p, s, s2) = (ps.p as u128, ps.s as u128, ps.s_prime as u128);
    let inputs = vec![format!("p={p}"), format!("s={s}"), format!("s_prime={s2}")];
    match ps.delta_star {
        None => vec![BoundEntry::int("pendant_exact", Exact, AlphaFrugal, s + s2, inputs)],
        Some(d) => {
            let d = d as u128;
            let mut inputs = inputs;
            inputs.push(format!("delta_star={d}"));
            let n = g.n() as u128;
            vec![BoundEntry::new("pendant_upper", Upper, AlphaFrugal, 2 * (n - p) + (s + s2) * (d + 1), d + 2, inputs)]
        }
    }
}

fn cubic_entries(g: &Graph, two: bool) -> Vec<BoundEntry> {
    use BoundKind::*;
    use BoundTarget::AlphaFrugal;
    let why = if !two {
        Some("requires t = 2")
    } else if g.n() == 0 || g.regular_degree() != Some(3) {
        Some("graph is not cubic")
    } else {
        None
    };
    if let Some(why) = why {
        return vec![
            BoundEntry::skipped("cubic_alpha_lower", Lower, AlphaFrugal, why),
            BoundEntry::skipped("cubic_alpha_upper", Upper, AlphaFrugal, why),
        ];
    }
    let n = g.n() as u128;
    vec![
        BoundEntry::new("cubic_alpha_lower", Lower, AlphaFrugal, n, 4, vec![format!("n={n}")]),
        BoundEntry::new("cubic_alpha_upper", Upper, AlphaFrugal, 2 * n, 5, vec![format!("n={n}")]),
    ]
}

/// A maximal `t`-frugal independent set, taken greedily by nondecreasing degree.
fn greedy_frugal_set(g: &Graph, t: Frugality) -> VertexSet {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut blocked = vec![false; g.n()];
    let mut cnt = vec![0usize; g.n()];
    let mut members = Vec::new();
    for v in order {
        if blocked[v] || g.neighbors(v).iter().any(|&w| cnt[w] >= t.get()) {
            continue;
        }
        members.push(v);
        blocked[v] = true;
        for &w in g.neighbors(v) {
            blocked[w] = true;
            cnt[w] += 1;
        }
    }
    VertexSet::new(members)
}

/// Bounds on `chi_2^f` of the product of `g` and `h` from exact invariants of the factors.
pub fn product_bounds(kind: ProductKind, g: &Graph, h: &Graph, budget: &SolveBudget) -> Result<Vec<BoundEntry>> {
    use BoundKind::*;
    use BoundTarget::ChiFrugal;
    let get = |o: Outcome<(usize, crate::check::Coloring)>| o.value().map(|(v, _)| v as u128).ok_or(Error::BudgetExhausted);
    let frugal = |x: &Graph| get(chi_t_frugal_exact(x, Frugality::TWO, budget));
    let chi2 = |x: &Graph| get(chi2_exact(x, budget));
    let inj = |x: &Graph| get(chi_injective_exact(x, budget));
    let note = |pairs: &[(&str, u128)]| pairs.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>();
    Ok(match kind {
        ProductKind::Cartesian => {
            let (fg, fh, sg, sh) = (frugal(g)?, frugal(h)?, chi2(g)?, chi2(h)?);
            vec![
                BoundEntry::int("cartesian_lower", Lower, ChiFrugal, fg.max(fh), note(&[("chi2f_g", fg), ("chi2f_h", fh)])),
                BoundEntry::int("cartesian_upper", Upper, ChiFrugal, sg.max(sh), note(&[("chi2_g", sg), ("chi2_h", sh)])),
            ]
        }
        ProductKind::Strong => {
            let (fg, fh, sg, sh) = (frugal(g)?, frugal(h)?, chi2(g)?, chi2(h)?);
            let v = (sg * fh).min(sh * fg);
            vec![BoundEntry::int("strong_upper", Upper, ChiFrugal, v, note(&[("chi2_g", sg), ("chi2f_h", fh), ("chi2_h", sh), ("chi2f_g", fg)]))]
        }
        ProductKind::Direct => {
            let (fg, fh, ig, ih) = (frugal(g)?, frugal(h)?, inj(g)?, inj(h)?);
            let v = (ig * fh).min(ih * fg);
            vec![BoundEntry::int("direct_upper", Upper, ChiFrugal, v, note(&[("chii_g", ig), ("chi2f_h", fh), ("chii_h", ih), ("chi2f_g", fg)]))]
        }
        ProductKind::Lexicographic => {
            let (fg, fh) = (frugal(g)?, frugal(h)?);
            let (d, nh) = (g.max_degree() as u128, h.n() as u128);
            vec![
                BoundEntry::int("lexicographic_lower", Lower, ChiFrugal, fh + (d * nh).div_ceil(2), note(&[("chi2f_h", fh), ("max_degree_g", d), ("n_h", nh)])),
                BoundEntry::int("lexicographic_upper", Upper, ChiFrugal, fg * nh, note(&[("chi2f_g", fg), ("n_h", nh)])),
            ]
        }
    })
}

/// `chi_2^f` of a graph and its complement, against the Nordhaus-Gaddum bounds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NGReport {
    pub n: usize,
    pub chi_g: usize,
    pub chi_complement: usize,
    pub sum: usize,
    /// `n/2 + 2`.
    pub lower_bound: f64,
    /// `3n/2`.
    pub upper_bound: f64,
    pub is_exceptional: bool,
    pub is_upper_extremal: bool,
}

impl NGReport {
    /// Whether the sum respects both bounds, the lower one waived for exceptional graphs.
    pub fn holds(&self) -> bool {
        let s = self.sum as f64;
        s <= self.upper_bound && (self.is_exceptional || s >= self.lower_bound)
    }
}

pub fn ng_report(g: &Graph, budget: &SolveBudget) -> Result<NGReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidParameter("the Nordhaus-Gaddum analysis needs at least two vertices".into()));
    }
    let comp = g.complement();
    let (a, b) = rayon::join(
        || chi_t_frugal_exact(g, Frugality::TWO, budget),
        || chi_t_frugal_exact(&comp, Frugality::TWO, budget),
    );
    let (Some((chi_g, _)), Some((chi_complement, _))) = (a.value(), b.value()) else {
        return Err(Error::BudgetExhausted);
    };
    let sum = chi_g + chi_complement;
    Ok(NGReport {
        n,
        chi_g,
        chi_complement,
        sum,
        lower_bound: n as f64 / 2.0 + 2.0,
        upper_bound: 1.5 * n as f64,
        is_exceptional: is_ng_exceptional(g),
        is_upper_extremal: 2 * sum == 3 * n,
    })
}

fn exceptional_fingerprints() -> &'static [NgFingerprint] {
    static FPS: OnceLock<Vec<NgFingerprint>> = OnceLock::new();
    FPS.get_or_init(|| ng_exceptional().iter().map(ng_fingerprint).collect())
}

/// Fingerprint match against the generated exceptional graphs.
pub fn is_ng_exceptional(g: &Graph) -> bool {
    g.n() == 9 && g.regular_degree() == Some(4) && exceptional_fingerprints().contains(&ng_fingerprint(g))
}

/// A partition into `r >= 2` parts with every vertex having exactly `t` neighbors in each other
/// part, if one exists. Such a graph is `t(r-1)`-regular and the parts are exactly the classes of
/// a `t`-frugal `r`-coloring, since a vertex then meets every other class the maximum `t` times.
pub fn is_psi_t(g: &Graph, t: Frugality, budget: &SolveBudget) -> Outcome<Option<Vec<VertexSet>>> {
    let Some(d) = g.regular_degree().filter(|&d| d > 0 && d % t.get() == 0) else {
        return Outcome::Exact(None);
    };
    let r = d / t.get() + 1;
    find_t_frugal_coloring(g, t, r, budget).map(|c| c.map(|c| c.classes()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::is_t_frugal_set;
    use crate::exact::alpha_t_frugal_exact;
    use crate::graph::{complete, complete_multipartite, cycle, double_star, path, psi_multipartite, random_cubic, spider, star};
    use proptest::prelude::*;

    fn entry<'a>(r: &'a [BoundEntry], name: &str) -> &'a BoundEntry {
        r.iter().find(|e| e.name == name).unwrap()
    }

    fn u() -> SolveBudget {
        SolveBudget::unlimited()
    }

    #[test]
    fn ratio_bound_is_exact_on_k222() {
        let g = psi_multipartite(2, 3).unwrap();
        let r = bounds_report(&g, Frugality::TWO, Known { alpha: Some(2), chi: None });
        let e = entry(&r, "alpha_ratio_lower");
        assert_eq!((e.value_num, e.value_den, e.rounded), (3, 1, Some(3)));
    }

    #[test]
    fn ratio_bound_rounding() {
        // 1/2 + sqrt(1/4 + 4/3) is irrational.
        let e = ratio_bound(4, 2, 3, vec![]);
        let exact = 0.5 + (0.25f64 + 8.0 / 6.0).sqrt();
        assert!(e.value() <= exact && exact - e.value() < 1e-5);
        assert_eq!(e.rounded, Some(exact.ceil() as u128));
        for m in 0..60u128 {
            for a in 1..12u128 {
                let e = ratio_bound(m, 2, a, vec![]);
                let x = 0.5 + (0.25 + 2.0 * m as f64 / (2.0 * a as f64)).sqrt();
                assert!((e.rounded.unwrap() as f64 - x.ceil()).abs() < 1e-9 || (x - x.round()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn pendant_examples() {
        let r = bounds_report(&spider(3), Frugality::TWO, Known::default());
        let e = entry(&r, "pendant_upper");
        assert_eq!((e.value_num, e.value_den), (4, 1));
        let r = bounds_report(&star(5), Frugality::TWO, Known::default());
        assert_eq!(entry(&r, "pendant_exact").value_num, 2);
        let r = bounds_report(&path(2), Frugality::TWO, Known::default());
        assert!(!entry(&r, "pendant_upper").applicable);
    }

    #[test]
    fn pendant_exact_case_matches_search() {
        let mut graphs = vec![star(3), star(6)];
        for a in 1..4 {
            for b in 1..4 {
                graphs.push(double_star(a, b));
            }
        }
        for g in graphs {
            let r = bounds_report(&g, Frugality::TWO, Known::default());
            let e = entry(&r, "pendant_exact");
            let exact = alpha_t_frugal_exact(&g, Frugality::TWO, &u()).value().unwrap().0;
            assert_eq!(e.value_num as usize, exact);
        }
    }

    #[test]
    fn triangle_free_examples() {
        let k33 = complete_multipartite(&[3, 3]);
        let r = bounds_report(&k33, Frugality::TWO, Known { alpha: Some(2), chi: None });
        assert_eq!(entry(&r, "triangle_free_upper").rounded, Some(4));
        assert!(!entry(&bounds_report(&complete(3), Frugality::TWO, Known::default()), "triangle_free_upper").applicable);
    }

    #[test]
    fn cubic_entries_for_random_cubic() {
        let g = random_cubic(10, 3).unwrap();
        let r = bounds_report(&g, Frugality::TWO, Known::default());
        assert_eq!(entry(&r, "cubic_alpha_lower").value(), 2.5);
        assert_eq!(entry(&r, "cubic_alpha_upper").value(), 4.0);
    }

    #[test]
    fn greedy_set_is_frugal() {
        for seed in 0..20 {
            let g = random_cubic(20, seed).unwrap();
            for t in 1..=3 {
                let t = Frugality::new(t).unwrap();
                assert!(is_t_frugal_set(&g, &greedy_frugal_set(&g, t), t));
            }
        }
    }

    #[test]
    fn psi_membership() {
        assert!(is_psi_t(&cycle(8).unwrap(), Frugality::TWO, &u()).value().unwrap().is_some());
        let parts = is_psi_t(&psi_multipartite(2, 3).unwrap(), Frugality::TWO, &u()).value().unwrap().unwrap();
        assert_eq!(parts.len(), 3);
        assert!(is_psi_t(&complete(4), Frugality::TWO, &u()).value().unwrap().is_none());
        assert!(is_psi_t(&cycle(5).unwrap(), Frugality::TWO, &u()).value().unwrap().is_none());
        let t3 = Frugality::new(3).unwrap();
        assert!(is_psi_t(&psi_multipartite(3, 3).unwrap(), t3, &u()).value().unwrap().is_some());
    }

    #[test]
    fn ratio_bound_equality_on_psi_members() {
        let cases = [(cycle(8).unwrap(), 2), (psi_multipartite(2, 3).unwrap(), 2), (psi_multipartite(3, 3).unwrap(), 3)];
        for (g, t) in cases {
            let t = Frugality::new(t).unwrap();
            let alpha = alpha_t_frugal_exact(&g, t, &u()).value().unwrap().0;
            let chi = chi_t_frugal_exact(&g, t, &u()).value().unwrap().0;
            let e = ratio_bound(g.m() as u128, t.get() as u128, alpha as u128, vec![]);
            assert_eq!((e.value_num, e.value_den), (chi as u128, 1));
        }
    }

    #[test]
    fn ng_examples() {
        let r = ng_report(&cycle(6).unwrap(), &u()).unwrap();
        assert_eq!((r.chi_g, r.chi_complement, r.sum), (2, 3, 5));
        assert_eq!(r.lower_bound, 5.0);
        let r = ng_report(&star(8), &u()).unwrap();
        assert_eq!(r.sum, 12);
        assert!(r.is_upper_extremal);
        for g in ng_exceptional() {
            let r = ng_report(&g, &u()).unwrap();
            assert_eq!(r.sum, 6);
            assert!(r.is_exceptional && r.holds());
        }
        assert!(ng_report(&Graph::edgeless(1), &u()).is_err());
    }

    #[test]
    fn product_bound_examples() {
        let b = product_bounds(ProductKind::Cartesian, &complete(4), &complete(3), &u()).unwrap();
        assert_eq!((b[0].value_num, b[1].value_num), (4, 4));
        let b = product_bounds(ProductKind::Strong, &cycle(6).unwrap(), &cycle(4).unwrap(), &u()).unwrap();
        assert_eq!(b[0].value_num, 6);
        let b = product_bounds(ProductKind::Lexicographic, &psi_multipartite(2, 3).unwrap(), &complete(3), &u()).unwrap();
        assert_eq!((b[0].value_num, b[1].value_num), (9, 9));
    }

    fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        use rand::{Rng, SeedableRng};
        let mut r = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| r.gen_bool(p)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(120))]
        #[test]
        fn report_brackets_exact_values(n in 2usize..10, p in 0.1f64..0.9, seed in 0u64..10_000, t in 1usize..4) {
            let g = random_graph(n, p, seed);
            let t = Frugality::new(t).unwrap();
            let chi = chi_t_frugal_exact(&g, t, &u()).value().unwrap().0;
            let alpha = alpha_t_frugal_exact(&g, t, &u()).value().unwrap().0;
            for known in [Known::default(), Known { chi: Some(chi), alpha: Some(alpha) }] {
                for e in bounds_report(&g, t, known) {
                    let x = match e.target {
                        BoundTarget::ChiFrugal => chi,
                        BoundTarget::AlphaFrugal => alpha,
                        BoundTarget::NgSum => continue,
                    };
                    prop_assert!(e.admits(x), "{} {:?} vs {}", e.name, e.rounded, x);
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn ng_bounds_on_small_graphs(n in 4usize..9, p in 0.05f64..0.95, seed in 0u64..100_000) {
            let g = random_graph(n, p, seed);
            let r = ng_report(&g, &u()).unwrap();
            prop_assert!(!r.is_exceptional);
            prop_assert!(r.holds());
            let star_like = g.n().is_multiple_of(2) && (g.degrees().iter().filter(|&&d| d == n - 1).count() == 1 && g.m() == n - 1
                || g.complement().degrees().iter().filter(|&&d| d == n - 1).count() == 1 && g.complement().m() == n - 1);
            prop_assert_eq!(r.is_upper_extremal, star_like);
        }
    }
}
