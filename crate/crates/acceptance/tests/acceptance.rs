//! Acceptance suite: one line per criterion, exact equality throughout.
//! Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_traits::Signed;
use tautslope::divisors::{
    gp_slope_closed, hypersurface_combo, slope, slope_bound, slope_report, standard_instances, syzygy_combo,
    syzygy_r, syzygy_slope_closed, FamilyParams,
};
use tautslope::families::{
    epsilon_matrix, identity_castelnuovo, identity_weierstrass_a, identity_weierstrass_c, reconstruct,
    rho_zero_triples, Evaluation, Taut,
};
use tautslope::numeric::{format_pq, int, rat};
use tautslope::schubert::{brute_zeta_integral, make_index, zeta_power_integral};
use tautslope::{castelnuovo_n, push_combo, Combo, GrassmannianSpec, GrdParams, Rational};

type Outcome = Result<(), Vec<String>>;
type Criterion = (u32, &'static str, fn() -> Outcome);

struct Check {
    problems: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { problems: Vec::new() }
    }

    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.problems.push(what());
        }
    }

    fn budget(&mut self, start: Instant, limit: Duration) {
        let took = start.elapsed();
        self.expect(took < limit, || format!("took {took:?}, budget {limit:?}"));
    }

    fn finish(self) -> Outcome {
        if self.problems.is_empty() {
            Ok(())
        } else {
            Err(self.problems)
        }
    }
}

fn grd(g: u32, r: u32, d: u32) -> GrdParams {
    GrdParams::brill_noether_zero(g, r, d).expect("rho = 0 triple")
}

fn n_of(p: &GrdParams) -> Rational {
    Rational::from_integer(p.n().expect("Castelnuovo number"))
}

fn genus_21() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let p = grd(21, 6, 24);
    let n = n_of(&p);
    let dc = push_combo(&Combo::from_ints(2, -1, -8, 1), &p).expect("pushforward");
    let lambda = int(2459) * &n / int(95);
    let delta0 = int(-377) * &n / int(95);
    c.expect(dc.lambda == lambda, || format!("λ = {}, want {}", format_pq(&dc.lambda), format_pq(&lambda)));
    c.expect(dc.delta[0] == delta0, || format!("δ0 = {}, want {}", format_pq(&dc.delta[0]), format_pq(&delta0)));
    c.expect(dc.psi == int(0), || format!("ψ = {}", format_pq(&dc.psi)));
    let s = slope(&dc).expect("slope");
    c.expect(s == rat(2459, 377), || format!("slope {}", format_pq(&s)));
    c.expect(s < int(6) + rat(12, 22), || "slope not below 6 + 12/22".into());
    c.expect(slope_bound(21) == int(6) + rat(12, 22), || "bound".into());
    c.budget(start, Duration::from_secs(1));
    c.finish()
}

fn genus_10() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let p = grd(10, 4, 12);
    let combo = Combo::from_ints(2, -1, -6, 1);
    c.expect(syzygy_combo(0, 1) == combo, || format!("syzygy_combo(0,1) = {}", syzygy_combo(0, 1)));
    let dc = push_combo(&combo, &p).expect("pushforward");
    let s = slope(&dc).expect("slope");
    c.expect(s == int(7), || format!("slope {}", format_pq(&s)));
    c.budget(start, Duration::from_secs(1));
    c.finish()
}

fn schubert_oracle() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let mut checked = 0usize;
    for r in 0..=3u32 {
        for d in r..=15u32 {
            let spec = GrassmannianSpec::new(r, d).expect("spec");
            let dim = spec.dim();
            for idx in spec.indices() {
                let gap = dim - idx.codim();
                let ks: Vec<u32> = match r {
                    // ζ is the unit class on P^d
                    0 if gap == 0 => vec![0, 1, 5],
                    0 => vec![],
                    _ if gap.is_multiple_of(r) => vec![gap / r],
                    _ => vec![],
                };
                for k in ks {
                    let closed = zeta_power_integral(spec, &idx, k).expect("closed form");
                    let brute = brute_zeta_integral(spec, &idx, k).expect("repeated Pieri");
                    checked += 1;
                    c.expect(closed == brute, || {
                        format!("G({r},P^{d}) {idx} k={k}: {} vs {}", format_pq(&closed), format_pq(&brute))
                    });
                }
            }
        }
    }
    let spec = GrassmannianSpec::new(1, 3).expect("spec");
    let pt = make_index(spec, &[0, 0]).expect("index");
    c.expect(zeta_power_integral(spec, &pt, 4).ok() == Some(int(2)), || "∫ζ^4 on G(1,P^3) is not 2".into());
    c.expect(checked > 0, || "nothing checked".into());
    c.budget(start, Duration::from_secs(300));
    c.finish()
}

fn castelnuovo() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let ev = Evaluation { brute_max_g: 12 };
    for p in rho_zero_triples(12) {
        match identity_castelnuovo(&p, ev) {
            Ok(rep) => c.expect(rep.pass, || rep.to_string()),
            Err(e) => c.expect(false, || format!("{p}: {e}")),
        }
    }
    for (t, n) in [((4, 1, 3), 2), ((6, 2, 6), 5), ((10, 4, 12), 42)] {
        let got = castelnuovo_n(t.0, t.1, t.2).expect("N");
        c.expect(got == n.into(), || format!("N{t:?} = {got}, want {n}"));
    }
    c.budget(start, Duration::from_secs(120));
    c.finish()
}

fn weierstrass() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    let ev = Evaluation { brute_max_g: 12 };
    for p in rho_zero_triples(12).into_iter().filter(|p| p.g >= 3) {
        match identity_weierstrass_a(&p, ev) {
            Ok(rep) => c.expect(rep.pass, || rep.to_string()),
            Err(e) => c.expect(false, || format!("a at {p}: {e}")),
        }
        if p.r >= 2 {
            match identity_weierstrass_c(&p, ev) {
                Ok(rep) => c.expect(rep.pass, || rep.to_string()),
                Err(e) => c.expect(false, || format!("c at {p}: {e}")),
            }
        }
    }
    c.budget(start, Duration::from_secs(120));
    c.finish()
}

fn closed_form_slopes() -> Outcome {
    let mut c = Check::new();
    for r in 1..=4 {
        for s in 1..=4 {
            let fp = FamilyParams::gp(r, s).expect("gp params");
            let rep = slope_report(&fp).expect("gp slope");
            let closed = gp_slope_closed(r, s);
            c.expect(rep.slope == closed, || {
                format!("gp({r},{s}): pipeline {} vs closed {}", format_pq(&rep.slope), format_pq(&closed))
            });
            let mirror = slope_report(&FamilyParams::gp(s, r).expect("gp params")).expect("gp slope");
            c.expect(rep.slope == mirror.slope, || format!("gp({r},{s}) not symmetric"));
        }
    }
    c.expect(gp_slope_closed(1, 1) == rat(17, 2), || "gp(1,1) is not 17/2".into());
    for i in [0, 1, 3] {
        for s in 0..=3 {
            let rep = slope_report(&FamilyParams::syzygy(i, s).expect("syzygy params")).expect("syzygy slope");
            match syzygy_slope_closed(i, s) {
                Ok(closed) => c.expect(rep.slope.abs() == closed.abs(), || {
                    format!(
                        "syzygy(i={i}, s={s}): |pipeline| {} vs |closed| {}",
                        format_pq(&rep.slope.abs()),
                        format_pq(&closed.abs())
                    )
                }),
                Err(e) => c.expect(false, || format!("syzygy(i={i}, s={s}): {e}")),
            }
        }
    }
    c.finish()
}

fn structural() -> Outcome {
    let mut c = Check::new();
    for fp in standard_instances() {
        match slope_report(&fp) {
            Ok(rep) => {
                let dc = &rep.pushforward;
                c.expect(dc.psi == int(0), || format!("{fp}: ψ = {}", format_pq(&dc.psi)));
                let defects = dc.reflection_defects();
                c.expect(defects.is_empty(), || format!("{fp}: δ_i ≠ δ_(g-i) for i in {defects:?}"));
            }
            Err(e) => c.expect(false, || format!("{fp}: {e}")),
        }
    }
    for s in 0..=4 {
        let r = syzygy_r(0, s);
        match hypersurface_combo(r, s, 2) {
            Ok(h) => c.expect(h == syzygy_combo(0, s), || format!("k = 2 vs i = 0 at s = {s}: {h} vs {}", syzygy_combo(0, s))),
            Err(e) => c.expect(false, || format!("hypersurface(r={r}, s={s}, k=2): {e}")),
        }
    }
    c.finish()
}

fn reconstruction() -> Outcome {
    let start = Instant::now();
    let mut c = Check::new();
    for (g, r, d) in [(6, 2, 6), (8, 3, 9), (10, 4, 12), (21, 6, 24)] {
        let p = grd(g, r, d);
        for w in Taut::ALL {
            match reconstruct(&p, w) {
                Ok(rec) => c.expect(rec.matches_closed_form, || rec.report().to_string()),
                Err(e) => c.expect(false, || format!("{w} at {p}: {e}")),
            }
        }
    }
    for g in 5..=30 {
        let ok = epsilon_matrix(g).map(|m| m.nonsingular()).unwrap_or(false);
        c.expect(ok, || format!("ε-matrix singular at g = {g}"));
    }
    c.budget(start, Duration::from_secs(60));
    c.finish()
}

/// Shortens a long list of problems to its first few entries.
fn summarize(problems: &[String]) -> String {
    const SHOWN: usize = 4;
    let mut s = problems.iter().take(SHOWN).cloned().collect::<Vec<_>>().join("; ");
    if problems.len() > SHOWN {
        s.push_str(&format!("; and {} more", problems.len() - SHOWN));
    }
    s
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        (1, "genus-21 class and slope", genus_21),
        (2, "genus-10 slope", genus_10),
        (3, "Schubert oracle, r <= 3, d <= 15", schubert_oracle),
        (4, "Castelnuovo identity, g <= 12", castelnuovo),
        (5, "Weierstrass fibre identities, g <= 12", weierstrass),
        (6, "closed-form slope oracles", closed_form_slopes),
        (7, "structural invariants of divisor families", structural),
        (8, "reconstruction and ε-matrices", reconstruction),
    ];
    let mut failed = 0;
    for (n, name, run) in criteria {
        match run() {
            Ok(()) => println!("criterion {n}: PASS ({name})"),
            Err(problems) => {
                failed += 1;
                println!("criterion {n}: FAIL ({name}): {} problem(s): {}", problems.len(), summarize(&problems));
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
