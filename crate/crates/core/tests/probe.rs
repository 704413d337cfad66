//! Scratch timing probe; run with
//! `cargo test --test probe -- --ignored --nocapture`.

use std::time::Instant;

use presmon::builders;
use presmon::engine::congruence::enumerate_presentation;
use presmon::engine::derive::{find_elementary_sequence, DeriveCaps};
use presmon::engine::rewrite::enumerate_presentation_kb;
use presmon::sn::moore;
use presmon::verify::{default_limit, verify_defines, MonoidFamily, MonoidSpec};
use presmon::Word;

fn time<T>(label: &str, f: impl FnOnce() -> T) -> T {
    let t0 = Instant::now();
    let out = f();
    println!("{label}: {:.2?}", t0.elapsed());
    out
}

#[test]
#[ignore]
fn probe_medium() {
    for n in [4, 5, 6] {
        let sp = moore(n).unwrap();
        let (p, asg) = builders::in_3rel(&sp).unwrap();
        let spec = MonoidSpec::new(MonoidFamily::In, n);
        let target = presmon::verify::order_of(spec).unwrap();
        let r = time(&format!("in_3rel n={n} (target {target})"), || {
            verify_defines(&p, &asg, spec, default_limit(target)).unwrap()
        });
        println!("  verdict {:?} presented {:?}", r.verdict, r.presented);
    }
    for n in [4, 5, 6] {
        let sp = moore(n).unwrap();
        let (p, asg) = builders::tn_aizenstat(&sp).unwrap();
        let spec = MonoidSpec::new(MonoidFamily::Tn, n);
        let target = presmon::verify::order_of(spec).unwrap();
        let r = time(&format!("aizenstat n={n} (target {target})"), || {
            verify_defines(&p, &asg, spec, default_limit(target)).unwrap()
        });
        println!("  verdict {:?} presented {:?}", r.verdict, r.presented);
    }
    for n in [4, 5] {
        let sp = moore(n).unwrap();
        let (p, asg) = builders::ptn_east(&sp).unwrap();
        let spec = MonoidSpec::new(MonoidFamily::Ptn, n);
        let target = presmon::verify::order_of(spec).unwrap();
        let r = time(&format!("east n={n} (target {target})"), || {
            verify_defines(&p, &asg, spec, default_limit(target)).unwrap()
        });
        println!("  verdict {:?} presented {:?}", r.verdict, r.presented);
    }
}

#[test]
#[ignore]
fn probe_kb() {
    for n in [4, 5] {
        let sp = moore(n).unwrap();
        let (p, _) = builders::in_3rel(&sp).unwrap();
        let spec = MonoidSpec::new(MonoidFamily::In, n);
        let target = presmon::verify::order_of(spec).unwrap();
        let r = time(&format!("KB in_3rel n={n}"), || {
            enumerate_presentation_kb(&p, default_limit(target), 50_000)
        });
        println!("  outcome {:?} rules {}", r.outcome, r.stats.nodes_defined);
    }
    for n in [4, 5] {
        let sp = moore(n).unwrap();
        let (p, _) = builders::tn_aizenstat(&sp).unwrap();
        let spec = MonoidSpec::new(MonoidFamily::Tn, n);
        let target = presmon::verify::order_of(spec).unwrap();
        let r = time(&format!("KB aizenstat n={n}"), || {
            enumerate_presentation_kb(&p, default_limit(target), 50_000)
        });
        println!("  outcome {:?} rules {}", r.outcome, r.stats.nodes_defined);
    }
    for n in [4, 5] {
        let sp = moore(n).unwrap();
        let (p, _) = builders::ptn_9rel(&sp).unwrap();
        let spec = MonoidSpec::new(MonoidFamily::Ptn, n);
        let target = presmon::verify::order_of(spec).unwrap();
        let r = time(&format!("KB ptn_9rel n={n}"), || {
            enumerate_presentation_kb(&p, default_limit(target), 50_000)
        });
        println!("  outcome {:?} rules {}", r.outcome, r.stats.nodes_defined);
    }
}

#[test]
#[ignore]
fn probe_derive_n7() {
    let sp = moore(7).unwrap();
    let (p, asg) = builders::tn_aizenstat(&sp).unwrap();
    let z = p.alphabet.letter("zeta").unwrap();
    let w17 = sp.word_for_cycles("(1,7)").unwrap();
    let zw = Word::single(z);
    let u = Word::concat(&[&zw, &w17, &zw, &w17]);
    let steps = time("derive ζ(1,7)ζ(1,7) → ζ", || {
        find_elementary_sequence(&p, &u, &zw, DeriveCaps::default(), Some(&asg)).unwrap()
    });
    match steps {
        Some(s) => println!("  found {} steps", s.len()),
        None => println!("  NOT FOUND"),
    }
}

#[test]
#[ignore]
fn probe_tn4_7() {
    let sp = moore(7).unwrap();
    let (p, asg) = builders::tn_4rel(&sp).unwrap();
    let spec = MonoidSpec::new(MonoidFamily::Tn, 7);
    let r = time("tn_4rel n=7 (target 823543)", || {
        verify_defines(&p, &asg, spec, default_limit(823543)).unwrap()
    });
    println!("  verdict {:?} presented {:?}", r.verdict, r.presented);
}

#[test]
#[ignore]
fn probe_pt8_7() {
    let sp = moore(7).unwrap();
    let (p, asg) = builders::ptn_8rel(&sp).unwrap();
    let spec = MonoidSpec::new(MonoidFamily::Ptn, 7);
    let r = time("ptn_8rel n=7 (target 2097152)", || {
        verify_defines(&p, &asg, spec, default_limit(2097152)).unwrap()
    });
    println!("  verdict {:?} presented {:?}", r.verdict, r.presented);
}

#[test]
#[ignore]
fn probe_raw_tc_aizenstat6() {
    let sp = moore(6).unwrap();
    let (p, _) = builders::tn_aizenstat(&sp).unwrap();
    let r = time("raw TC aizenstat n=6", || enumerate_presentation(&p, 4 * 46656));
    println!("  outcome {:?} stats {:?}", r.outcome, r.stats);
}
