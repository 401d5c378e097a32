use stickygap::{bessel_j, bessel_j_quadrature, BesselOrder};

#[test]
fn agrees_with_quadrature_on_grid() {
    let mut worst: f64 = 0.0;
    for m in 0..=10 {
        let order = BesselOrder::new(m).unwrap();
        for i in 0..=300 {
            let x = i as f64 * 0.1;
            let a = bessel_j(order, x).unwrap();
            let q = bessel_j_quadrature(order, x, 1024).unwrap();
            worst = worst.max((a - q).abs());
        }
    }
    assert!(worst <= 1e-12, "worst deviation {worst:e}");
}

#[test]
fn pure_and_thread_safe() {
    let order = BesselOrder::new(3).unwrap();
    let expected = bessel_j(order, 7.5).unwrap();
    let handles: Vec<_> = (0..8)
        .map(|_| std::thread::spawn(move || bessel_j(order, 7.5).unwrap()))
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), expected);
    }
}
