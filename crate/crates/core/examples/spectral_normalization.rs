//! Normalisation and overlaps of the two-peak photon states, checked by quadrature.

use gravent::quadrature::Quadrature;
use gravent::spectra::TwoPeakSpectrum;

fn main() -> gravent::Result<()> {
    let quad = Quadrature::default();
    for ratio in [0.5, 2.0, 5.0, 20.0] {
        let s = TwoPeakSpectrum::new(100.0, 100.0 + ratio, 1.0, 0.0)?;
        let (a, b) = s.window();
        let mz = quad.integrate(|w| s.psi_mz(w).unwrap().norm_sqr(), a, b)?.value;
        let hom = quad.integrate_2d(|x, y| s.psi_hom(x, y).unwrap().norm_sqr(), (a, b), (a, b))?.value;
        println!(
            "ratio {ratio:>4}: overlap {:.3e}  N_mz {:.6}  N_hom {:.6}  integrals {mz:.12} {hom:.12}",
            s.overlap_mz(),
            s.norm_mz()?,
            s.norm_hom()?
        );
    }
    Ok(())
}
