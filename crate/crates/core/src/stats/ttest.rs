use super::special::regularized_incomplete_beta;
use crate::error::{Error, Result};

/// `n`, mean and sample standard deviation (n − 1 normalization).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleSummary {
    n: usize,
    mean: f64,
    std_dev: f64,
}

impl SampleSummary {
    pub fn new(n: usize, mean: f64, std_dev: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Input(format!("a sample needs at least 2 observations, got {n}")));
        }
        if !mean.is_finite() || !(std_dev >= 0.0 && std_dev.is_finite()) {
            return Err(Error::Input(format!("invalid summary: mean = {mean}, sd = {std_dev}")));
        }
        Ok(Self { n, mean, std_dev })
    }

    pub fn from_observations(values: &[f64]) -> Result<Self> {
        let n = values.len();
        if n < 2 {
            return Err(Error::Input(format!("a sample needs at least 2 observations, got {n}")));
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let ss: f64 = values.iter().map(|v| (v - mean).powi(2)).sum();
        Self::new(n, mean, (ss / (n - 1) as f64).sqrt())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn std_dev(&self) -> f64 {
        self.std_dev
    }

    fn variance_of_mean(&self) -> f64 {
        self.std_dev * self.std_dev / self.n as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TTestResult {
    pub t_statistic: f64,
    /// Satterthwaite effective degrees of freedom, not rounded.
    pub degrees_of_freedom: f64,
    pub p_two_sided: f64,
}

/// Upper tail `P(T > t)` of Student's t with `df` degrees of freedom, `t ≥ 0`.
pub fn student_t_sf(t: f64, df: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("survival function expects t >= 0, got {t}")));
    }
    if !(df > 0.0) {
        return Err(Error::Domain(format!("degrees of freedom must be positive, got {df}")));
    }
    if t.is_infinite() {
        return Ok(0.0);
    }
    Ok(0.5 * regularized_incomplete_beta(0.5 * df, 0.5, df / (df + t * t))?)
}

/// `P(T ≤ t)`, evaluated through the complementary incomplete beta for `t ≥ 0`.
pub fn student_t_cdf(t: f64, df: f64) -> Result<f64> {
    if t.is_nan() {
        return Err(Error::Domain("t is NaN".into()));
    }
    if t < 0.0 {
        return student_t_sf(-t, df);
    }
    if !(df > 0.0) {
        return Err(Error::Domain(format!("degrees of freedom must be positive, got {df}")));
    }
    if t.is_infinite() {
        return Ok(1.0);
    }
    Ok(0.5 + 0.5 * regularized_incomplete_beta(0.5, 0.5 * df, t * t / (df + t * t))?)
}

/// Welch's unequal-variance t-test, two-sided.
pub fn welch_t_test(a: &SampleSummary, b: &SampleSummary) -> Result<TTestResult> {
    let va = a.variance_of_mean();
    let vb = b.variance_of_mean();
    let se2 = va + vb;
    if se2 == 0.0 {
        return Err(Error::Input("both samples have zero variance; the t statistic is undefined".into()));
    }
    let t = (a.mean - b.mean) / se2.sqrt();
    let df = if va == vb && a.n == b.n {
        // the general expression reduces exactly to this
        2.0 * (a.n - 1) as f64
    } else {
        se2 * se2 / (va * va / (a.n - 1) as f64 + vb * vb / (b.n - 1) as f64)
    };
    let p = (2.0 * student_t_sf(t.abs(), df)?).min(1.0);
    Ok(TTestResult { t_statistic: t, degrees_of_freedom: df, p_two_sided: p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// `P(|T| > t)` by Simpson's rule after `x = √ν tan θ`, normalizing by
    /// the same quadrature over the full range; no special functions.
    pub(crate) fn two_sided_p_by_quadrature(t: f64, df: f64) -> f64 {
        let simpson = |upper: f64| {
            let n = 20_000;
            let h = upper / n as f64;
            let f = |th: f64| th.cos().powf(df - 1.0);
            let mut s = f(0.0) + f(upper);
            for i in 1..n {
                s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
            }
            s * h / 3.0
        };
        let theta = (t / df.sqrt()).atan();
        1.0 - simpson(theta) / simpson(std::f64::consts::FRAC_PI_2)
    }

    #[test]
    fn sf_examples() {
        for df in [1.0, 3.5, 100.0] {
            assert_eq!(student_t_sf(0.0, df).unwrap(), 0.5);
        }
        let cauchy = 1.0 - (0.5 + 1f64.atan() / std::f64::consts::PI);
        assert!((student_t_sf(1.0, 1.0).unwrap() - cauchy).abs() < 1e-12);
        assert!((student_t_sf(1.0, 1.0).unwrap() - 0.25).abs() < 1e-12);
        assert!((student_t_sf(1.959_964, 1e6).unwrap() - 0.025).abs() < 1e-5);
        assert!(student_t_sf(-1.0, 3.0).is_err());
        assert!(student_t_sf(1.0, 0.0).is_err());
    }

    #[test]
    fn identical_and_equal_means() {
        let a = SampleSummary::new(5, 1.0, 0.3).unwrap();
        let r = welch_t_test(&a, &a).unwrap();
        assert_eq!((r.t_statistic, r.p_two_sided), (0.0, 1.0));

        let a = SampleSummary::new(10, 5.0, 1.0).unwrap();
        let b = SampleSummary::new(10, 5.0, 2.0).unwrap();
        let r = welch_t_test(&a, &b).unwrap();
        assert_eq!((r.t_statistic, r.p_two_sided), (0.0, 1.0));
    }

    #[test]
    fn equal_variance_example() {
        let a = SampleSummary::new(5, 1.0, 0.5).unwrap();
        let b = SampleSummary::new(5, 2.0, 0.5).unwrap();
        let r = welch_t_test(&a, &b).unwrap();
        assert!((r.t_statistic + 10f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.degrees_of_freedom, 8.0);
        let oracle = two_sided_p_by_quadrature(10f64.sqrt(), 8.0);
        assert!((r.p_two_sided - oracle).abs() < 1e-6);
        assert!((r.p_two_sided - 0.0133).abs() < 5e-5, "{}", r.p_two_sided);
    }

    #[test]
    fn unequal_variances_give_fractional_df() {
        let a = SampleSummary::new(5, 1.0, 0.2).unwrap();
        let b = SampleSummary::new(5, 1.3, 0.6).unwrap();
        let r = welch_t_test(&a, &b).unwrap();
        assert!(r.degrees_of_freedom.fract() != 0.0);
        assert!(r.degrees_of_freedom > 4.0 && r.degrees_of_freedom < 8.0);
    }

    #[test]
    fn degenerate_variance() {
        let a = SampleSummary::new(3, 1.0, 0.0).unwrap();
        let b = SampleSummary::new(4, 2.0, 0.0).unwrap();
        assert!(matches!(welch_t_test(&a, &b), Err(Error::Input(_))));
        // one zero variance is fine
        let c = SampleSummary::new(4, 2.0, 1.0).unwrap();
        assert_eq!(welch_t_test(&a, &c).unwrap().degrees_of_freedom, 3.0);
    }

    #[test]
    fn summaries_from_observations() {
        let s = SampleSummary::from_observations(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.mean(), 2.5);
        assert!((s.std_dev() - (5.0f64 / 3.0).sqrt()).abs() < 1e-15);
        assert!(SampleSummary::from_observations(&[1.0]).is_err());
        assert!(SampleSummary::new(5, 0.0, -1.0).is_err());
    }

    #[test]
    fn oracle_grid() {
        for df in [1.0, 2.0, 4.7, 8.0, 30.0] {
            for i in 0..=40 {
                let t = i as f64 * 0.25;
                let p = 2.0 * student_t_sf(t, df).unwrap();
                let oracle = two_sided_p_by_quadrature(t, df);
                assert!((p - oracle).abs() < 1e-6, "df={df} t={t}: {p} vs {oracle}");
            }
        }
    }

    proptest! {
        #[test]
        fn scale_invariance(
            n1 in 2usize..30, n2 in 2usize..30,
            m1 in -10.0f64..10.0, m2 in -10.0f64..10.0,
            s1 in 0.01f64..5.0, s2 in 0.01f64..5.0, k in 1e-3f64..1e3,
        ) {
            let r = welch_t_test(&SampleSummary::new(n1, m1, s1).unwrap(), &SampleSummary::new(n2, m2, s2).unwrap()).unwrap();
            let rk = welch_t_test(
                &SampleSummary::new(n1, k * m1, k * s1).unwrap(),
                &SampleSummary::new(n2, k * m2, k * s2).unwrap(),
            ).unwrap();
            prop_assert!((r.t_statistic - rk.t_statistic).abs() <= 1e-10 * r.t_statistic.abs().max(1.0));
            prop_assert!((r.degrees_of_freedom - rk.degrees_of_freedom).abs() <= 1e-10 * r.degrees_of_freedom);
            prop_assert!((r.p_two_sided - rk.p_two_sided).abs() <= 1e-10);
        }

        #[test]
        fn antisymmetry(
            n1 in 2usize..30, n2 in 2usize..30,
            m1 in -10.0f64..10.0, m2 in -10.0f64..10.0,
            s1 in 0.01f64..5.0, s2 in 0.01f64..5.0,
        ) {
            let a = SampleSummary::new(n1, m1, s1).unwrap();
            let b = SampleSummary::new(n2, m2, s2).unwrap();
            let ab = welch_t_test(&a, &b).unwrap();
            let ba = welch_t_test(&b, &a).unwrap();
            prop_assert_eq!(ab.t_statistic, -ba.t_statistic);
            prop_assert!((ab.degrees_of_freedom - ba.degrees_of_freedom).abs() <= 1e-12 * ab.degrees_of_freedom);
            prop_assert!((ab.p_two_sided - ba.p_two_sided).abs() <= 1e-14);
        }

        #[test]
        fn equal_variance_df(n in 2usize..200, s in 1e-3f64..1e3, m1 in -5.0f64..5.0, m2 in -5.0f64..5.0) {
            let r = welch_t_test(&SampleSummary::new(n, m1, s).unwrap(), &SampleSummary::new(n, m2, s).unwrap()).unwrap();
            prop_assert_eq!(r.degrees_of_freedom, 2.0 * (n - 1) as f64);
        }

        #[test]
        fn sf_and_cdf_sum_to_one(t in 0.0f64..50.0, df in 0.2f64..200.0) {
            let total = student_t_sf(t, df).unwrap() + student_t_cdf(t, df).unwrap();
            prop_assert!((total - 1.0).abs() < 1e-12);
        }

        #[test]
        fn sf_monotone(t in 0.0f64..20.0, dt in 1e-3f64..5.0, df in 0.5f64..100.0) {
            prop_assert!(student_t_sf(t + dt, df).unwrap() <= student_t_sf(t, df).unwrap());
        }
    }
}
