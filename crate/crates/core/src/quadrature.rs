//! Adaptive Gauss-Kronrod (G10/K21) quadrature.
//!
//! The integrator is generic over the value type so a single pass can
//! integrate a real function, a complex function, or a whole vector of
//! density-matrix entries sharing the same nodes.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::{Error, Result};

/// Values that can be integrated: a real vector space with a size measure.
pub trait QuadValue: Copy + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn zero() -> Self;
    /// Largest absolute component, used for error control.
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn zero() -> Self {
        0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn magnitude(&self) -> f64 {
        self.re.abs().max(self.im.abs())
    }
}

/// Fixed-size real vector for integrating several quantities at once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Components<const N: usize>(pub [f64; N]);

impl<const N: usize> Add for Components<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

impl<const N: usize> Sub for Components<N> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a -= b;
        }
        self
    }
}

impl<const N: usize> Mul<f64> for Components<N> {
    type Output = Self;
    fn mul(mut self, rhs: f64) -> Self {
        for a in self.0.iter_mut() {
            *a *= rhs;
        }
        self
    }
}

impl<const N: usize> QuadValue for Components<N> {
    fn zero() -> Self {
        Components([0.0; N])
    }
    fn magnitude(&self) -> f64 {
        self.0.iter().fold(0.0, |m, x| m.max(x.abs()))
    }
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_958_109_831_074,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

/// Result of an integration.
#[derive(Debug, Clone, Copy)]
pub struct Estimate<V> {
    pub value: V,
    pub error: f64,
    pub evaluations: usize,
}

/// Adaptive quadrature settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
    /// Number of equal pieces the range is cut into before adapting.
    pub initial_segments: usize,
}

impl Default for Quadrature {
    fn default() -> Self {
        Quadrature {
            abs_tol: 1e-12,
            rel_tol: 0.0,
            max_intervals: 50_000,
            initial_segments: 1,
        }
    }
}

struct Interval<V> {
    a: f64,
    b: f64,
    value: V,
    error: f64,
}

impl<V> PartialEq for Interval<V> {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}
impl<V> Eq for Interval<V> {}
impl<V> PartialOrd for Interval<V> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<V> Ord for Interval<V> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// One 21-point Kronrod evaluation with the QUADPACK error heuristic.
fn kronrod21<V: QuadValue, F: FnMut(f64) -> V>(f: &mut F, a: f64, b: f64) -> (V, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = V::zero();
    let mut samples = [(V::zero(), V::zero()); 10];
    let mut resabs = fc.magnitude() * WGK[10];
    for (j, sample) in samples.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        let pair = f1 + f2;
        kronrod = kronrod + pair * WGK[j];
        resabs += WGK[j] * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            gauss = gauss + pair * WG[j / 2];
        }
        *sample = (f1, f2);
    }
    let mean = kronrod * 0.5;
    let mut resasc = WGK[10] * (fc - mean).magnitude();
    for (j, (f1, f2)) in samples.iter().enumerate() {
        resasc += WGK[j] * ((*f1 - mean).magnitude() + (*f2 - mean).magnitude());
    }
    let value = kronrod * half;
    let resabs = resabs * half.abs();
    let resasc = resasc * half.abs();
    let mut err = ((kronrod - gauss) * half).magnitude();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    (value, err)
}

impl Quadrature {
    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_initial_segments(mut self, n: usize) -> Self {
        self.initial_segments = n.max(1);
        self
    }

    /// Integrates `f` over `[a, b]`.
    pub fn integrate<V, F>(&self, mut f: F, a: f64, b: f64) -> Result<Estimate<V>>
    where
        V: QuadValue,
        F: FnMut(f64) -> V,
    {
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::Domain(format!("integration bounds must be finite, got [{a}, {b}]")));
        }
        if a == b {
            return Ok(Estimate { value: V::zero(), error: 0.0, evaluations: 0 });
        }
        let segments = self.initial_segments.max(1);
        let width = (b - a) / segments as f64;
        let mut heap = BinaryHeap::with_capacity(segments * 2);
        let mut evaluations = 0;
        for k in 0..segments {
            let lo = a + width * k as f64;
            let hi = if k + 1 == segments { b } else { a + width * (k + 1) as f64 };
            let (value, error) = kronrod21(&mut f, lo, hi);
            evaluations += 21;
            heap.push(Interval { a: lo, b: hi, value, error });
        }
        let requested = |total: &V| self.abs_tol.max(self.rel_tol * total.magnitude());
        loop {
            let (total, total_err) = heap
                .iter()
                .fold((V::zero(), 0.0), |(v, e), iv| (v + iv.value, e + iv.error));
            if total_err <= requested(&total) {
                return Ok(Estimate { value: total, error: total_err, evaluations });
            }
            if heap.len() >= self.max_intervals {
                return Err(Error::NonConvergence { achieved: total_err, requested: requested(&total) });
            }
            // Bisect the worst intervals in a batch to keep the bookkeeping cheap.
            let batch = (heap.len() / 8).max(1);
            for _ in 0..batch {
                let worst = match heap.pop() {
                    Some(iv) => iv,
                    None => break,
                };
                let mid = 0.5 * (worst.a + worst.b);
                if mid <= worst.a || mid >= worst.b {
                    return Err(Error::NonConvergence { achieved: total_err, requested: requested(&total) });
                }
                let (v1, e1) = kronrod21(&mut f, worst.a, mid);
                let (v2, e2) = kronrod21(&mut f, mid, worst.b);
                evaluations += 42;
                heap.push(Interval { a: worst.a, b: mid, value: v1, error: e1 });
                heap.push(Interval { a: mid, b: worst.b, value: v2, error: e2 });
            }
        }
    }

    /// Integrates `f(x, y)` over a rectangle as nested one-dimensional integrals.
    pub fn integrate_2d<V, F>(&self, mut f: F, x: (f64, f64), y: (f64, f64)) -> Result<Estimate<V>>
    where
        V: QuadValue,
        F: FnMut(f64, f64) -> V,
    {
        let inner_tol = self.abs_tol / (x.1 - x.0).abs().max(1.0);
        let inner = Quadrature { abs_tol: inner_tol, ..*self };
        let mut failure = None;
        let mut evaluations = 0;
        let outer = self.integrate(
            |xv| match inner.integrate(|yv| f(xv, yv), y.0, y.1) {
                Ok(est) => {
                    evaluations += est.evaluations;
                    est.value
                }
                Err(e) => {
                    failure.get_or_insert(e);
                    V::zero()
                }
            },
            x.0,
            x.1,
        )?;
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(Estimate { evaluations, ..outer })
    }
}
