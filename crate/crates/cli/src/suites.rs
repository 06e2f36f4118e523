//! The cross-verification matrix behind `ppwb verify`.

use std::collections::BTreeMap;
use std::collections::HashSet;

use num_bigint::BigInt;
use ppwb::dimer::{
    build_hex_graph, enumerate_matchings, kasteleyn_count, matching_to_tiling, pp_to_tiling,
    tiling_to_matching, tiling_to_pp,
};
use ppwb::gogmagog::{
    asm_to_mt, conjecture_tables, enumerate_asm, enumerate_gog, enumerate_magog,
    enumerate_monotone_triangles, k1_count, mt_to_asm, tsscpp_magog_check, OverlapConvention,
};
use ppwb::lgv::{box_det_count, enumerate_path_families, paths_to_pp, pp_to_paths};
use ppwb::partition::{partitions_in_box, Partition};
use ppwb::plane::{enumerate_box, enumerate_by_size};
use ppwb::qseries::{all_pp_series, box_count, box_gf, class_formula, tsscpp_count, verify_c9c10};
use ppwb::schur::{
    enumerate_ssyt, pp_box_to_ssyt, schur_principal_bialternant, schur_sum, ssyt_count,
    ssyt_to_pp_box, verify_mmschur, verify_s2, verify_sc_sum,
};
use ppwb::symmetry::{class_gf, enumerate_class};
use ppwb::trace::{gansner_check, stanley_map, stanley_unmap, trace_gf_bruteforce, trace_gf_product};
use ppwb::{BoxDims, PlanePartition, QPolynomial, SymmetryClass, Weight};

use crate::report::{Check, VerifyReport};

pub const SUITES: [&str; 6] = ["box", "classes", "trace", "schur", "dimer", "gogmagog"];

/// Runs one named suite, or every suite for `"all"`.
pub fn run_suite(name: &str) -> Option<VerifyReport> {
    let checks = match name {
        "box" => box_suite(),
        "classes" => classes_suite(),
        "trace" => trace_suite(),
        "schur" => schur_suite(),
        "dimer" => dimer_suite(),
        "gogmagog" => gogmagog_suite(),
        "all" => SUITES.iter().flat_map(|s| run_suite(s).unwrap().checks).collect(),
        _ => return None,
    };
    Some(VerifyReport::new(name, checks))
}

fn bx(a: usize, b: usize, c: u32) -> BoxDims {
    BoxDims::new(a, b, c).expect("positive sides")
}

fn cls(id: u8) -> SymmetryClass {
    SymmetryClass::new(id).expect("class id in range")
}

/// All boxes with sides in `1..=3`, plus `2x3x4`.
pub fn small_boxes() -> Vec<BoxDims> {
    let mut out = Vec::new();
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                out.push(bx(a, b, c));
            }
        }
    }
    out.push(bx(2, 3, 4));
    out
}

fn size_histogram<I: Iterator<Item = PlanePartition>>(pps: I) -> QPolynomial {
    let mut counts: Vec<i64> = Vec::new();
    for pp in pps {
        let s = pp.size() as usize;
        if counts.len() <= s {
            counts.resize(s + 1, 0);
        }
        counts[s] += 1;
    }
    QPolynomial::from_i64s(&counts)
}

fn box_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    for d in small_boxes() {
        let brute = BigInt::from(enumerate_box(d).count());
        let g = build_hex_graph(d);
        let kast = kasteleyn_count(&g.graph).map_or_else(|e| e.to_string(), |v| v.to_string());
        checks.push(Check::compare(format!("box.count.{d}.mm"), &brute, box_count(d)));
        checks.push(Check::compare(format!("box.count.{d}.det"), &brute, box_det_count(d)));
        checks.push(Check::compare(format!("box.count.{d}.kasteleyn"), &brute, kast));
        checks.push(Check::compare(
            format!("box.count.{d}.paths"),
            &brute,
            enumerate_path_families(d).len(),
        ));
        if d.a <= 3 && d.b <= 3 && d.c <= 3 {
            checks.push(Check::compare(
                format!("box.gf.{d}"),
                size_histogram(enumerate_box(d)),
                box_gf(d),
            ));
        }
    }
    let mut brute = size_histogram(enumerate_by_size(10));
    brute = &brute + &QPolynomial::one();
    checks.push(Check::compare("box.ppall.10", brute, all_pp_series(10).truncate(10)));
    checks
}

/// Every box the class-formula checks visit, keyed by class id.
pub fn class_boxes(id: u8) -> Vec<BoxDims> {
    let mut out = Vec::new();
    match id {
        2 => {
            for a in 1..=3 {
                for c in 1..=3 {
                    out.push(bx(a, a, c));
                }
            }
        }
        3 | 4 => out.extend((1..=3).map(|a| bx(a, a, a as u32))),
        5 => {
            for a in 1..=5 {
                for b in 1..=5 {
                    for c in 1..=5u32 {
                        if (a * b * c as usize).is_multiple_of(2) {
                            out.push(bx(a, b, c));
                        }
                    }
                }
            }
        }
        6 => {
            for a in 1..=4 {
                for c in 1..=3u32 {
                    out.push(bx(a, a, 2 * c));
                }
            }
        }
        7 => {
            for a in 1..=6 {
                for c in 1..=3u32 {
                    out.push(bx(a, a, 2 * c));
                }
            }
        }
        8 | 9 => out.extend((1..=2).map(|a| bx(2 * a, 2 * a, 2 * a as u32))),
        10 => out.extend((1..=3).map(|a| bx(2 * a, 2 * a, 2 * a as u32))),
        _ => {}
    }
    out
}

fn formula_text(id: u8, d: BoxDims, w: Weight) -> String {
    match class_formula(cls(id), d, w) {
        Ok(v) => match v.as_poly() {
            Some(p) => p.to_string(),
            None => v.count().to_string(),
        },
        Err(e) => format!("error: {e}"),
    }
}

fn classes_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    for id in 2..=10u8 {
        for d in class_boxes(id) {
            let c = cls(id);
            match id {
                2 => {
                    for (w, tag) in [(Weight::Size, "size"), (Weight::HalfSize, "half")] {
                        checks.push(Check::compare(
                            format!("classes.c2.{tag}.{d}"),
                            formula_text(id, d, w),
                            class_gf(c, d, w),
                        ));
                    }
                }
                3 => checks.push(Check::compare(
                    format!("classes.c3.{d}"),
                    formula_text(id, d, Weight::Size),
                    class_gf(c, d, Weight::Size),
                )),
                4 => checks.push(Check::compare(
                    format!("classes.c4.{d}"),
                    formula_text(id, d, Weight::Orbit),
                    class_gf(c, d, Weight::Orbit),
                )),
                _ => checks.push(Check::compare(
                    format!("classes.c{id:02}.{d}"),
                    formula_text(id, d, Weight::Size),
                    enumerate_class(c, d).count(),
                )),
            }
        }
    }
    for a in 1..=3 {
        checks.push(Check::truth(format!("classes.c9c10.a{a}"), verify_c9c10(a)));
    }
    checks
}

pub fn trace_example() -> PlanePartition {
    PlanePartition::new(vec![
        vec![4, 3, 2, 2],
        vec![4, 3, 1, 1],
        vec![2, 2, 1, 1],
        vec![1, 1],
        vec![1, 1],
    ])
    .expect("worked example is a plane partition")
}

fn trace_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    let brute = trace_gf_bruteforce(8);
    let product = trace_gf_product(8);
    for n in 0..=8 {
        checks.push(Check::compare(
            format!("trace.gf.q{n}"),
            format!("{:?}", product.q_coeff(n)),
            format!("{:?}", brute.q_coeff(n)),
        ));
    }
    let mut size_bad = 0;
    let mut trace_bad = 0;
    let mut inverse_bad = 0;
    let mut images = HashSet::new();
    let mut total = 0;
    for pp in enumerate_by_size(8) {
        total += 1;
        let m = stanley_map(&pp);
        if m.weighted_sum(-1) != pp.size() as i64 {
            size_bad += 1;
        }
        if m.total() != pp.trace() {
            trace_bad += 1;
        }
        if stanley_unmap(&m).ok().as_ref() != Some(&pp) {
            inverse_bad += 1;
        }
        images.insert(m);
    }
    checks.push(Check::compare("trace.stanley.size", 0, size_bad));
    checks.push(Check::compare("trace.stanley.trace", 0, trace_bad));
    checks.push(Check::compare("trace.stanley.inverse", 0, inverse_bad));
    checks.push(Check::compare("trace.stanley.injective", total, images.len()));
    let m = stanley_map(&trace_example());
    checks.push(Check::compare("trace.example.sum_m", 8, m.total()));
    checks.push(Check::compare("trace.example.weighted", trace_example().size(), m.weighted_sum(-1)));
    for shape in [&[1][..], &[2], &[1, 1], &[2, 1], &[2, 2]] {
        let p = Partition::new(shape.to_vec()).expect("valid shape");
        checks.push(Check::truth(format!("trace.gansner.{p}"), gansner_check(&p, 6)));
    }
    checks
}

fn schur_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    for shape in partitions_in_box(3, 3) {
        for n in shape.len().max(1)..=4 {
            let bialt = schur_principal_bialternant(&shape, n)
                .map_or_else(|e| e.to_string(), |p| p.to_string());
            checks.push(Check::compare(
                format!("schur.bialternant.{shape}.n{n}"),
                schur_sum(&shape, n).principal_specialization(),
                bialt,
            ));
            checks.push(Check::compare(
                format!("schur.ts.{shape}.n{n}"),
                enumerate_ssyt(&shape, n as u32).count(),
                ssyt_count(&shape, n),
            ));
        }
    }
    for a in 1..=3 {
        for b in 1..=3 {
            for c in 1..=3 {
                let d = bx(a, b, c);
                checks.push(Check::truth(format!("schur.mmschur.{d}"), verify_mmschur(d)));
            }
        }
    }
    for a1 in 1..=2 {
        for b1 in 1..=2 {
            for m in 1..=4 {
                checks.push(Check::truth(
                    format!("schur.s2.a{a1}b{b1}m{m}"),
                    verify_s2(a1, b1, m),
                ));
            }
            for c1 in 1..=2 {
                checks.push(Check::truth(
                    format!("schur.sum1.a{a1}b{b1}c{c1}"),
                    verify_sc_sum(a1, b1, c1),
                ));
            }
        }
    }
    let d = bx(3, 4, 6);
    let p = pile();
    let ok = pp_box_to_ssyt(&p, d)
        .and_then(|t| ssyt_to_pp_box(&t, d))
        .is_ok_and(|back| back == p);
    checks.push(Check::truth("schur.pile.roundtrip", ok));
    checks
}

pub fn pile() -> PlanePartition {
    PlanePartition::new(vec![vec![5, 3, 3, 2], vec![5, 1, 1], vec![3, 1]])
        .expect("worked example is a plane partition")
}

fn dimer_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    for d in small_boxes() {
        let g = build_hex_graph(d);
        let kast = kasteleyn_count(&g.graph).map_or_else(|e| e.to_string(), |v| v.to_string());
        checks.push(Check::compare(
            format!("dimer.matchings.{d}"),
            enumerate_matchings(&g.graph).count(),
            kast,
        ));
        let mut bad = 0;
        let mut total = 0;
        for pp in enumerate_box(d) {
            total += 1;
            let ok = pp_to_tiling(&pp, d)
                .and_then(|t| {
                    let m = tiling_to_matching(&t, &g)?;
                    let back = matching_to_tiling(&m, &g)?;
                    Ok(back == t && tiling_to_pp(&back)? == pp)
                })
                .unwrap_or(false);
            if !ok {
                bad += 1;
            }
            let ok = pp_to_paths(&pp, d)
                .and_then(|f| paths_to_pp(&f, d))
                .is_ok_and(|back| back == pp);
            if !ok {
                bad += 1;
            }
        }
        checks.push(Check::compare(format!("dimer.roundtrip.{d}"), format!("0/{total}"), format!("{bad}/{total}")));
    }
    let d = bx(3, 4, 5);
    let ok = pp_to_tiling(&pile(), d)
        .and_then(|t| tiling_to_pp(&t))
        .is_ok_and(|back| back == pile());
    checks.push(Check::truth("dimer.pile.roundtrip", ok));
    checks
}

/// The `(s, t)` table of `(m, n, 1)` Gog trapezoids compared with the closed
/// formula. Returns the number of mismatching cells and whether the observed
/// table is symmetric.
pub fn k1_agreement(m: usize, n: usize, conv: OverlapConvention) -> (usize, bool) {
    let observed = match conjecture_tables(m, n, 1, conv) {
        Ok(c) => c.gog.swapped(),
        Err(_) => return (usize::MAX, false),
    };
    let mut bad = 0;
    for s in 0..=n {
        for t in 0..=n {
            if observed.get(s as u32, t as u32) != k1_count(m, n, s, t) {
                bad += 1;
            }
        }
    }
    (bad, observed.is_symmetric())
}

fn gogmagog_suite() -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=4 {
        checks.push(Check::compare(
            format!("gogmagog.asm.count.n{n}"),
            tsscpp_count(n),
            enumerate_asm(n).count(),
        ));
        let mut bad = 0;
        for a in enumerate_asm(n) {
            if mt_to_asm(&asm_to_mt(&a)).ok().as_ref() != Some(&a) {
                bad += 1;
            }
        }
        for t in enumerate_monotone_triangles(n) {
            let back = mt_to_asm(&t).map(|a| asm_to_mt(&a));
            if back.ok().as_ref() != Some(&t) {
                bad += 1;
            }
        }
        checks.push(Check::compare(format!("gogmagog.asm.roundtrip.n{n}"), 0, bad));
    }
    for m in 0..=2 {
        for n in 1..=5 {
            for k in 1..=n {
                let magog = enumerate_magog(m, n, k).map(|v| v.len());
                let gog = enumerate_gog(m, n, k).map(|v| v.len());
                checks.push(Check::compare(
                    format!("gogmagog.totals.m{m}n{n}k{k}"),
                    format!("{magog:?}"),
                    format!("{gog:?}"),
                ));
                if n <= 4 {
                    let (status, json) = match conjecture_tables(m, n, k, OverlapConvention::Both) {
                        Ok(c) => (c.equal(), c.to_json().to_string()),
                        Err(e) => (false, e.to_string()),
                    };
                    let mut check = Check::compare(format!("gogmagog.conjecture.m{m}n{n}k{k}"), "equal", json);
                    check.status = if status {
                        crate::report::Status::Pass
                    } else {
                        crate::report::Status::Fail
                    };
                    checks.push(check);
                }
            }
        }
    }
    for m in 1..=3 {
        for n in 1..=6 {
            let (bad, symmetric) = k1_agreement(m, n, OverlapConvention::Both);
            checks.push(Check::compare(format!("gogmagog.k1.m{m}n{n}"), 0, bad));
            checks.push(Check::truth(format!("gogmagog.k1.m{m}n{n}.symmetric"), symmetric));
        }
    }
    let mut by_conv: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for conv in OverlapConvention::ALL {
        let mut exact = 0;
        let mut symmetric = 0;
        for n in 1..=5 {
            let (bad, sym) = k1_agreement(0, n, conv);
            exact += usize::from(bad == 0);
            symmetric += usize::from(sym);
        }
        by_conv.insert(conv.name(), (exact, symmetric));
    }
    for (name, (exact, symmetric)) in by_conv {
        checks.push(Check::info(
            format!("gogmagog.k1.m0.{name}"),
            "reported only",
            format!("formula exact for {exact}/5 of n=1..5, tables symmetric for {symmetric}/5"),
        ));
    }
    for n in 1..=3 {
        checks.push(Check::truth(format!("gogmagog.tsscpp.n{n}"), tsscpp_magog_check(n)));
    }
    checks
}
