use stickygap::models::needle::needle_root_config;
use stickygap::models::needle_secular_fn;
use stickygap::{
    all_roots_in, bessel_j_prime, bessel_j_quadrature, disk_secular_fn, Alpha, BesselOrder,
    RootSearchConfig,
};

fn ord(m: u32) -> BesselOrder {
    BesselOrder::new(m).unwrap()
}

#[test]
fn extrema_of_j0_match_oracle_brackets() {
    let cfg = RootSearchConfig::on_interval(0.1, 15.0).unwrap();
    let roots = all_roots_in(|x| bessel_j_prime(ord(0), x).unwrap(), &cfg).unwrap();
    assert!(roots.len() >= 3);

    // oracle: sign changes of a central difference of the quadrature
    let h = 1e-5;
    let d = |x: f64| {
        (bessel_j_quadrature(ord(0), x + h, 1024).unwrap()
            - bessel_j_quadrature(ord(0), x - h, 1024).unwrap())
            / (2.0 * h)
    };
    let step = 0.01;
    let mut oracle = Vec::new();
    let mut x = 0.1;
    while x < 15.0 && oracle.len() < 3 {
        if d(x) * d(x + step) <= 0.0 {
            oracle.push((x, x + step));
        }
        x += step;
    }
    for (r, (lo, hi)) in roots.iter().zip(&oracle) {
        assert!(
            *lo <= r.root && r.root <= *hi,
            "{} not in [{lo}, {hi}]",
            r.root
        );
    }
}

#[test]
fn roots_are_sorted_distinct_and_small() {
    let alpha = Alpha::new(0.4).unwrap();
    let cfg = RootSearchConfig::on_interval(1e-2, 20.0).unwrap();
    for m in 0..4 {
        let f = |x: f64| disk_secular_fn(ord(m), alpha, x * x).unwrap();
        let roots = all_roots_in(f, &cfg).unwrap();
        assert!(!roots.is_empty());
        for w in roots.windows(2) {
            assert!(w[1].root - w[0].root >= cfg.step / 2.0);
        }
        for r in &roots {
            assert!(r.converged);
            assert!(r.bracket.0 <= r.root && r.root <= r.bracket.1);
            let scale = f(r.bracket.0).abs().max(f(r.bracket.1).abs()).max(1.0);
            assert!(r.residual <= 1e-9 * scale);
        }
    }
}

fn refinement_keeps_roots<F: Fn(f64) -> f64 + Copy>(f: F, cfg: RootSearchConfig) {
    let coarse = all_roots_in(f, &cfg).unwrap();
    let fine_cfg = cfg.with_step(cfg.step / 10.0).unwrap();
    let fine = all_roots_in(f, &fine_cfg).unwrap();
    for r in coarse.iter().filter(|r| r.converged) {
        assert!(
            fine.iter().any(|s| (s.root - r.root).abs() < 1e-9),
            "root {} lost after refinement",
            r.root
        );
    }
}

#[test]
fn monotone_refinement_disk() {
    for &a in &[0.1, 0.5, 0.9] {
        let alpha = Alpha::new(a).unwrap();
        for m in 0..3 {
            let f = move |x: f64| disk_secular_fn(ord(m), alpha, x * x).unwrap();
            let cfg = RootSearchConfig::on_interval(1e-2, 12.0)
                .unwrap()
                .with_step(1e-2)
                .unwrap();
            refinement_keeps_roots(f, cfg);
        }
    }
}

#[test]
fn monotone_refinement_needle() {
    for &l in &[0.5, 1.0, std::f64::consts::TAU, 20.0] {
        let f = move |g: f64| needle_secular_fn(g, l).unwrap();
        let cfg = needle_root_config().with_step(1e-3).unwrap();
        refinement_keeps_roots(f, cfg);
    }
}
