use hypcover_core::generator::generate;
use hypcover_core::geometry::{
    angular_distance, dominance_angle, expected_degree_at_radius, mu_dominance_area, radial_quantile, ModelParams,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

#[test]
fn dominance_measure_agrees_with_monte_carlo() {
    let p = ModelParams::new(10_000, 0.75, 8.0).unwrap();
    let big_r = p.radius();
    let r_u = 0.75 * big_r;
    let phi_u = 1.0;
    let trials = 1_000_000;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut hits = 0u64;
    for _ in 0..trials {
        let phi: f64 = rng.gen::<f64>() * TAU;
        let r = radial_quantile(rng.gen(), &p).unwrap();
        if r >= r_u && angular_distance(phi, phi_u) <= dominance_angle(r_u, r, big_r).unwrap() {
            hits += 1;
        }
    }
    let est = hits as f64 / trials as f64;
    let se = (est * (1.0 - est) / trials as f64).sqrt();
    let numeric = mu_dominance_area(r_u, &p).unwrap();
    assert!((est - numeric).abs() <= 3.0 * se, "mc {est} ± {se}, quadrature {numeric}");
}

#[test]
fn observed_degree_near_expected_at_radius() {
    let p = ModelParams::new(10_000, 0.75, 8.0).unwrap();
    let s = generate(&p, 21).unwrap();
    let r = 0.7 * p.radius();
    let bin: Vec<usize> = (0..p.n())
        .filter(|&v| (s.coords[v].r - r).abs() <= 0.1)
        .collect();
    assert!(!bin.is_empty());
    let mean = bin.iter().map(|&v| s.graph.degree(v) as f64).sum::<f64>() / bin.len() as f64;
    let ratio = mean / expected_degree_at_radius(r, &p);
    assert!((0.5..=2.0).contains(&ratio), "ratio {ratio} over {} vertices", bin.len());
}
