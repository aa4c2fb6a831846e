use tempered::distribution::{delta, fourier_dist};
use tempered::sobolev::sobolev_norm;
use tempered::{SchwartzFn, SeminormIndex};

#[test]
fn readme_walkthrough() -> tempered::Result<()> {
    let g = SchwartzFn::gaussian();
    assert!(g.fourier().approx_eq(&g));

    let f = g.derivative().mul_by_x();
    let p = f.seminorm(SeminormIndex { k: 1, n: 0 });
    assert!(p > 0.0);

    let d = delta();
    assert!((d.apply(&f) - f.eval(0.0)).norm() < 1e-12);
    let integral = fourier_dist(&d).apply(&g);
    assert!((integral.re - 1.0).abs() < 1e-14);

    let h2 = sobolev_norm(&g, 2.0)?;
    assert!(h2 > g.l2_norm());
    Ok(())
}
