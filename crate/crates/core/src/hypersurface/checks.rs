//! The identity and bound ledger evaluated on a finished report.

use serde::Serialize;

use super::pog::Classification;
use super::report::HypersurfaceReport;
use crate::polyring::euler_vector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Monitored only; the statement is an open question.
    Info,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub status: CheckStatus,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

impl IdentityCheck {
    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

struct Ledger(Vec<IdentityCheck>);

impl Ledger {
    fn push(&mut self, name: impl Into<String>, status: CheckStatus, lhs: impl ToString, rhs: impl ToString, detail: impl Into<String>) {
        self.0.push(IdentityCheck {
            name: name.into(),
            status,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail: detail.into(),
        });
    }

    fn check(&mut self, name: impl Into<String>, ok: bool, lhs: impl ToString, rhs: impl ToString, detail: impl Into<String>) {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        self.push(name, status, lhs, rhs, detail);
    }

    fn skip(&mut self, name: impl Into<String>, why: impl Into<String>) {
        self.push(name, CheckStatus::Skipped, "", "", why);
    }
}

fn e2(xs: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            s += xs[i] * xs[j];
        }
    }
    s
}

fn names(r: &HypersurfaceReport, idx: &[usize]) -> String {
    let v: Vec<&str> = idx.iter().map(|&i| r.syzygies.names[i].as_str()).collect();
    format!("({})", v.join(","))
}

/// Evaluate every applicable statement on `r`. Failures are recorded, not
/// raised.
pub fn verify_identities(r: &HypersurfaceReport) -> Vec<IdentityCheck> {
    let mut l = Ledger(Vec::new());
    let syz = &r.syzygies;
    let (n, m) = (r.n as i64, syz.m as i64);
    let d = r.d as i64;
    let ds: Vec<i64> = syz.sorted_degrees.iter().map(|&x| x as i64).collect();
    let deg_sigma = r.sigma.deg_sigma;
    let s = r.sigma.s;
    let free = r.classification == Classification::Free;

    general_checks(&mut l, r, n, m, d, &ds);
    if n == 2 {
        curve_checks(&mut l, r, m, d, &ds);
    }
    if free {
        let sum: i64 = ds.iter().sum();
        l.check("free_exponents_sum_to_d_minus_1", sum == d - 1, sum, d - 1, "");
        l.check("free_singular_locus_has_dimension_n_minus_2", s == n - 2, s, n - 2, "");
        let bound = (d - 1) * (d - 1) - e2(&ds);
        l.check("free_singular_degree_formula", deg_sigma == bound, deg_sigma, bound, "(d-1)^2 - s2");
    }
    tame_checks(&mut l, r, n, m, d, free);
    pog_checks(&mut l, r, n, d);
    open_bound_monitors(&mut l, r, n, m, d, &ds);
    oracle_checks(&mut l, r);
    l.0
}

fn general_checks(l: &mut Ledger, r: &HypersurfaceReport, n: i64, m: i64, d: i64, ds: &[i64]) {
    let syz = &r.syzygies;
    l.check("generator_count_at_least_n", m >= n, m, n, "");
    l.check("minimal_exponent_positive", ds[0] >= 1, ds[0], 1, "");
    l.check("singular_locus_dimension_at_most_n_minus_2", r.sigma.s <= n - 2, r.sigma.s, n - 2, "");
    let grad = r.f.gradient();
    let euler = euler_vector(r.f.ring()).dot(&grad).ok();
    let df = r.f.scale(&crate::polyring::Rational::from_integer(d.into()));
    l.check("euler_identity", euler.as_ref() == Some(&df), "sum x_j f_j", "d*f", "");
    let bad: Vec<&str> = syz
        .generators
        .iter()
        .zip(&syz.names)
        .filter(|(g, _)| !g.dot(&grad).map(|p| p.is_zero()).unwrap_or(false))
        .map(|(_, n)| n.as_str())
        .collect();
    l.check("every_generator_is_a_syzygy", bad.is_empty(), bad.len(), 0, bad.join(","));
    for b in &r.bourbaki_results {
        let tag = names(r, &b.subset);
        l.check(format!("bourbaki_map_kills_subset_and_euler {tag}"), b.vanishing_ok, b.vanishing_ok, true, "");
        l.check(format!("bourbaki_images_have_expected_degrees {tag}"), b.degrees_ok, b.degrees_ok, true, format!("delta = {}", b.delta));
        l.check(format!("tame_implies_rank_condition {tag}"), !b.tame || b.rank_ok, b.tame, b.rank_ok, "");
    }
}

fn curve_checks(l: &mut Ledger, r: &HypersurfaceReport, m: i64, d: i64, ds: &[i64]) {
    if d < 3 {
        l.skip("plane_curve_checks", "degree below 3");
        return;
    }
    let (d1, d2) = (ds[0], ds[1]);
    let free = m == 2;
    l.check("plane_curve_free_iff_first_two_exponents_sum_to_d_minus_1", free == (d1 + d2 == d - 1), d1 + d2, d - 1, format!("free = {free}"));
    if !free {
        l.check("nonfree_plane_curve_first_two_exponents_at_least_d", d1 + d2 >= d, d1 + d2, d, "");
        let pog = r.classification.is_pog();
        l.check("plane_curve_pog_iff_first_two_exponents_sum_to_d", pog == (d1 + d2 == d), d1 + d2, d, format!("pog = {pog}"));
    }
    if let Some(eps) = &r.epsilon_shifts {
        let sum: i64 = eps.iter().sum();
        l.check("first_two_exponents_equal_d_minus_1_plus_epsilon_sum", d1 + d2 == d - 1 + sum, d1 + d2, d - 1 + sum, format!("epsilon = {eps:?}"));
        l.check("epsilon_shifts_positive", eps.iter().all(|&e| e >= 1), format!("{eps:?}"), ">= 1", "");
    }
    let upper = d1 + d2 - d + 3;
    l.check("generator_count_within_exponent_bounds", 2 <= m && m <= upper, m, format!("[2, {upper}]"), "");
    l.check("generator_count_at_most_d_plus_1", m <= d + 1, m, d + 1, "");
    let dm = *ds.last().expect("generators");
    l.check("top_exponent_at_most_2d_minus_4", dm <= 2 * d - 4, dm, 2 * d - 4, "");
    match &r.arrangement {
        Some(a) if a.verified => {
            l.check("line_arrangement_generator_count_at_most_d_minus_1", m <= d - 1, m, d - 1, "");
            l.check("line_arrangement_top_exponent_at_most_d_minus_2", dm <= d - 2, dm, d - 2, "");
        }
        Some(_) => l.skip("line_arrangement_bounds", "arrangement declaration not verified"),
        None => {}
    }
    if let Some(t) = &r.tjurina {
        l.check("total_tjurina_number_at_most_maximal_bound", t.tau <= t.bound, t.tau, t.bound, format!("r = {}", t.r));
        let attained = t.tau == t.bound;
        l.check("tjurina_bound_attained_iff_free", attained == free && (!free || 2 * t.r < d), t.tau, t.bound, format!("free = {free}"));
        let nearly = r.classification == Classification::NearlyFree;
        l.check("tjurina_bound_minus_one_iff_nearly_free", (t.tau == t.bound - 1) == nearly && (!nearly || 2 * t.r <= d), t.tau, t.bound - 1, format!("nearly_free = {nearly}"));
    }
    let syz = &r.syzygies;
    if let Some(i) = (0..syz.m).find(|&i| syz.degrees[i] as i64 == ds[0]) {
        match r.tame_for(&[i]) {
            Some(t) => l.check("plane_curve_tame_wrt_minimal_degree_syzygy", t, t, true, names(r, &[i])),
            None => l.skip("plane_curve_tame_wrt_minimal_degree_syzygy", "subset not scanned"),
        }
    }
}

fn tame_checks(l: &mut Ledger, r: &HypersurfaceReport, n: i64, m: i64, d: i64, free: bool) {
    let syz = &r.syzygies;
    for b in r.bourbaki_results.iter().filter(|b| b.tame) {
        let tag = names(r, &b.subset);
        match b.saturated {
            Some(sat) => l.check(format!("tame_bourbaki_ideal_saturated {tag}"), sat, sat, true, ""),
            None => l.skip(format!("tame_bourbaki_ideal_saturated {tag}"), "saturation not computed"),
        }
        let dim = if b.is_unit { -1 } else { n + 1 - b.bourbaki_height.value as i64 };
        l.check(format!("tame_bourbaki_quotient_dimension_at_most_n_minus_1 {tag}"), dim <= n - 1, dim, n - 1, "");
        let count = b.minimal_generators.len() as i64;
        l.check(format!("tame_bourbaki_generator_count_is_m_minus_n_plus_1 {tag}"), count == m - n + 1, count, m - n + 1, "");
        l.check(format!("tame_free_iff_bourbaki_ideal_is_unit {tag}"), free == b.is_unit, b.is_unit, free, "");
        l.check(
            format!("tame_plus_one_syzygy_iff_bourbaki_complete_intersection {tag}"),
            (m == n + 1) == b.complete_intersection_codim2,
            b.complete_intersection_codim2,
            m == n + 1,
            "",
        );
        let base: i64 = b.subset_degrees.iter().map(|&x| x as i64).sum();
        let sums: Vec<i64> = b.outside.iter().map(|&j| base + syz.degrees[j] as i64).collect();
        let all_ge = sums.iter().all(|&s| s >= d - 1);
        let some_eq = sums.iter().any(|&s| s == d - 1);
        l.check(
            format!("tame_exponent_sum_lower_bound {tag}"),
            all_ge && some_eq == free,
            format!("{sums:?}"),
            format!(">= {}", d - 1),
            format!("equality = {some_eq}, free = {free}"),
        );
        if r.sigma.s == n - 2 {
            let mut e: Vec<i64> = b.subset_degrees.iter().map(|&x| x as i64).collect();
            e.push(d - 1 - base);
            let bound = (d - 1) * (d - 1) - e2(&e);
            let ds = r.sigma.deg_sigma;
            l.check(
                format!("tame_singular_degree_upper_bound {tag}"),
                ds <= bound && (ds == bound) == free,
                ds,
                bound,
                format!("exponents used {e:?}"),
            );
        }
    }
}

fn pog_checks(l: &mut Ledger, r: &HypersurfaceReport, n: i64, d: i64) {
    let syz = &r.syzygies;
    let nu = r.n;
    if syz.m == nu + 1 {
        strict_from_tame(l, r, d);
    }
    let Some(p) = &r.pog else { return };
    let combo = syz
        .generators
        .iter()
        .enumerate()
        .map(|(i, g)| g.scale(p.coefficient(i)))
        .try_fold(None, |acc: Option<crate::polyring::ModuleVector>, v| match acc {
            None => Ok::<_, crate::Error>(Some(v)),
            Some(a) => Ok(Some(a.checked_add(&v)?)),
        })
        .ok()
        .flatten();
    let exact = combo.is_some_and(|c| c.is_zero());
    l.check("pog_relation_is_exact", exact, "sum b_j rho_j", 0, p.relation.to_string());
    let unit_free = p.coefficient_degrees.iter().all(|x| *x != Some(0));
    l.check("pog_relation_has_no_unit_coefficient", unit_free, unit_free, true, "");

    if let Some(o) = &p.witness_ordering {
        let e: Vec<i64> = o.iter().map(|&i| syz.degrees[i] as i64).collect();
        let first: i64 = e[..nu].iter().sum();
        l.check("strict_pog_degree_is_sum_of_first_n_exponents", first == d, first, d, format!("ordering {}", names(r, o)));
        let formula = e[..nu].iter().map(|x| x * x).sum::<i64>() + e2(&e[..nu]) - e.iter().sum::<i64>();
        if r.sigma.s == n - 2 {
            l.check("strict_pog_singular_degree_formula", formula == r.sigma.deg_sigma, r.sigma.deg_sigma, formula, format!("exponents {e:?}"));
        } else {
            l.check("strict_pog_exponent_identity_for_small_singular_locus", formula == 0, formula, 0, format!("dim sigma = {}", r.sigma.s));
        }
        match r.bourbaki_for(&o[..nu - 1]) {
            Some(b) => {
                let pos = b.outside.iter().position(|&j| j == o[nu - 1]).expect("outside");
                let v = &b.bourbaki_generators[pos];
                l.check("strict_pog_nth_image_is_linear", !v.is_zero() && v.degree() == Some(1), v, "nonzero linear form", "");
            }
            None => l.skip("strict_pog_nth_image_is_linear", "subset not evaluated"),
        }
    }
    let given: Vec<usize> = (0..syz.m).collect();
    let mut orderings = vec![given];
    for o in [&p.witness_ordering, &p.equal_top_ordering].into_iter().flatten() {
        if !orderings.contains(o) {
            orderings.push(o.clone());
        }
    }
    for o in &orderings {
        let tag = names(r, o);
        let strict = p.strict_for(o);
        let divides = p.ell_divides_bn_for(o).ok().flatten();
        let lhs = strict && divides == Some(false);
        match r.tame_for(&o[..nu - 1]) {
            Some(t) => l.check(format!("pog_strict_with_ell_not_dividing_bn_iff_tame {tag}"), lhs == t, lhs, t, ""),
            None => l.skip(format!("pog_strict_with_ell_not_dividing_bn_iff_tame {tag}"), "subset not evaluated"),
        }
        let Some(b) = r.bourbaki_for(&o[..nu - 1]) else { continue };
        let last = o[nu];
        let bn = p.coefficient(o[nu - 1]);
        if !strict {
            if bn.is_zero() {
                l.check(format!("nonstrict_pog_bourbaki_ideal_zero {tag}"), b.is_zero, b.is_zero, true, "");
            } else {
                let pos = b.outside.iter().position(|&j| j == last).expect("outside");
                let gen = &b.bourbaki_generators[pos];
                let principal = b.minimal_generators.len() == 1
                    && !gen.is_zero()
                    && b.ideal().ok().zip(crate::groebner::Ideal::new(r.f.ring(), vec![gen.clone()]).ok())
                        .is_some_and(|(x, y)| x.same_as(&y).unwrap_or(false));
                l.check(format!("nonstrict_pog_bourbaki_ideal_principal {tag}"), principal, b.minimal_generators.len(), 1, "");
            }
        } else if b.tame {
            let gap = syz.degrees[last] as i64 - syz.degrees[o[nu - 1]] as i64 + 1;
            let mut want = vec![1, gap];
            want.sort_unstable();
            let got: Vec<i64> = b.minimal_generator_degrees.iter().map(|&x| x as i64).collect();
            l.check(
                format!("tame_strict_pog_bourbaki_complete_intersection_degrees {tag}"),
                b.complete_intersection_codim2 && got == want,
                format!("{got:?}"),
                format!("{want:?}"),
                "",
            );
        } else {
            let hyperplane = b.minimal_generators.len() == 1 && b.minimal_generator_degrees == [1];
            l.check(format!("nontame_strict_pog_bourbaki_ideal_is_hyperplane {tag}"), hyperplane, format!("{:?}", b.minimal_generator_degrees), "[1]", "");
        }
    }
}

/// Tame `(n+1)`-syzygy hypersurfaces with `d = d_1 + … + d_n` are strictly
/// POG with respect to that ordering.
fn strict_from_tame(l: &mut Ledger, r: &HypersurfaceReport, d: i64) {
    let syz = &r.syzygies;
    for v in r.tame_scan.verdicts.iter().filter(|v| v.tame) {
        let rest: Vec<usize> = (0..syz.m).filter(|i| !v.subset.contains(i)).collect();
        for (a, b) in [(rest[0], rest[1]), (rest[1], rest[0])] {
            if v.degree_sum as i64 + syz.degrees[a] as i64 != d {
                continue;
            }
            let mut o = v.subset.clone();
            o.push(a);
            o.push(b);
            let strict = r.pog.as_ref().is_some_and(|p| p.strict_for(&o));
            l.check(format!("tame_with_degree_identity_is_strict_pog {}", names(r, &o)), strict, strict, true, "");
        }
    }
}

fn open_bound_monitors(l: &mut Ledger, r: &HypersurfaceReport, n: i64, m: i64, d: i64, ds: &[i64]) {
    // m ≤ C(n+1, 2)(d+1)/3, compared as 3m ≤ C(n+1, 2)(d+1)
    let c = (n + 1) * n / 2;
    let holds = 3 * m <= c * (d + 1);
    let equal = 3 * m == c * (d + 1);
    l.push(
        "generator_count_open_bound",
        CheckStatus::Info,
        m,
        format!("{:.2}", (c * (d + 1)) as f64 / 3.0),
        if equal { "equality" } else if holds { "holds" } else { "violated" },
    );
    let dm = *ds.last().expect("generators");
    l.push(
        "top_exponent_open_bound",
        CheckStatus::Info,
        dm,
        n * (d - 2),
        if dm <= n * (d - 2) { "holds" } else { "violated" },
    );
    let first: i64 = ds[..r.n.min(ds.len())].iter().sum();
    if first == d && !r.classification.is_pog() && r.classification != Classification::Free {
        l.push(
            "degree_identity_without_pog",
            CheckStatus::Info,
            first,
            d,
            "first n exponents sum to d but the hypersurface is not plus-one generated",
        );
    }
}

fn oracle_checks(l: &mut Ledger, r: &HypersurfaceReport) {
    let Some(o) = &r.oracle else { return };
    let dims: Vec<i64> = o.counts.iter().map(|c| c.dimension as i64).collect();
    l.check("oracle_dimensions_match_groebner", dims == o.groebner_dimensions, format!("{dims:?}"), format!("{:?}", o.groebner_dimensions), "");
    let expected: Vec<usize> = (0..=o.k_max)
        .map(|k| r.syzygies.degrees.iter().filter(|&&x| x == k).count())
        .collect();
    let mu: Vec<usize> = o.counts.iter().map(|c| c.mu).collect();
    l.check("oracle_generator_counts_match_exponents", mu == expected, format!("{mu:?}"), format!("{expected:?}"), "");
}

