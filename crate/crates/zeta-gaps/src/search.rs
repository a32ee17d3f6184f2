//! Derivative-free one-dimensional search used by the bound solvers:
//! golden-section maximization and bisection for threshold crossings.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search for the maximum of a unimodal `f` on `[a, b]`.
///
/// Returns `(argmax, f(argmax))` once the bracket has shrunk below `tol`.
pub fn golden_section_max<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);

    while b - a > tol {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }

    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Largest `x` in `[0, hi]` with `g(x) > 0`, assuming `g` changes sign at
/// most once on the interval.
///
/// Bisection keeps the invariant `g(lo) > 0`, so the returned point always
/// satisfies the strict inequality. Returns `0` when `g(0) <= 0` and `hi`
/// when `g` stays positive over the whole interval.
pub fn largest_positive<F: Fn(f64) -> f64>(g: F, hi: f64, tol: f64) -> f64 {
    if g(0.0) <= 0.0 {
        return 0.0;
    }
    if g(hi) > 0.0 {
        return hi;
    }
    let mut lo = 0.0;
    let mut hi = hi;
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}
