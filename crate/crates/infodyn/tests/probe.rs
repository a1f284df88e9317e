// temporary probe, deleted before finalizing
use infodyn::estimators::*;
use infodyn::inference::{SignificanceSpec, SurrogateKind};
use infodyn::kernels::{sample_standard, RngHandle, StandardDist};
use infodyn::series::TimeSeries;

fn ar1(n: usize, a: f64, seed: u64) -> TimeSeries {
    let noise = sample_standard(&RngHandle::new(seed, 0), StandardDist::Normal, n + 100);
    let mut v = Vec::with_capacity(n + 100);
    let mut x = 0.0;
    for e in noise {
        x = a * x + e;
        v.push(x);
    }
    TimeSeries::new(v.split_off(100), 0, 1, "ar1").unwrap()
}

#[test]
#[ignore]
fn probe_ais_argmax() {
    let spec = SignificanceSpec { n_surrogates: 50, alpha: 0.05, kind: SurrogateKind::CircularShift };
    for seed in 0..10u64 {
        let x = ar1(8192, 0.6, 1000 + seed);
        let mut vals = Vec::new();
        for kappa in 1..=6usize {
            let mut cfg = EstimatorConfig::default();
            cfg.k = kappa;
            vals.push(active_information_storage(&x, &cfg).unwrap().value_nats);
        }
        let k = select_history(&x, (1, 6), &EstimatorConfig::default(), Some((&spec, &RngHandle::new(2000 + seed, 0)))).unwrap();
        println!("seed {seed}: k={k} AIS={vals:?}");
    }
}

#[test]
#[ignore]
fn probe_multi_info_bias() {
    for &n in &[4096usize, 10_000, 16_384] {
        let mk = |s| {
            TimeSeries::new(
                sample_standard(&RngHandle::new(37, s), StandardDist::Normal, n),
                0,
                1,
                "c",
            )
            .unwrap()
        };
        let (a, b, c) = (mk(0), mk(1), mk(2));
        let m3 = multi_information(&[&a, &b, &c], &EstimatorConfig::default()).unwrap();
        let z1 = sample_standard(&RngHandle::new(36, 0), StandardDist::Normal, n);
        let z2 = sample_standard(&RngHandle::new(36, 1), StandardDist::Normal, n);
        let ys: Vec<f64> = z1.iter().zip(&z2).map(|(p, q)| 0.6 * p + 0.8 * q).collect();
        let x = TimeSeries::new(z1, 0, 1, "x").unwrap();
        let y = TimeSeries::new(ys, 0, 1, "y").unwrap();
        let m2 = multi_information(&[&x, &y], &EstimatorConfig::default()).unwrap();
        let mi = transfer_entropy(&x, &y, &EstimatorConfig::default()); // placeholder no
        drop(mi);
        let (pair, _) = infodyn::estimators::ksg_cmi_samples(
            &infodyn::kernels::Matrix::column(&x.values),
            &infodyn::kernels::Matrix::column(&y.values),
            None,
            4,
            None,
        )
        .unwrap();
        println!("n={n}: indep3={:.4} two={:.4} pairwise={:.4} diff={:.4}", m3.value_nats, m2.value_nats, pair, (m2.value_nats - pair).abs());
    }
}
