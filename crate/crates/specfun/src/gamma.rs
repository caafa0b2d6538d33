use std::f64::consts::PI;

/// Γ(a) for a = two_a / 2 with two_a odd and positive.
///
/// Built from Γ(½) = √π and Γ(a + 1) = a Γ(a). Returns NaN for an even or
/// non-positive argument.
pub fn gamma_half(two_a: u32) -> f64 {
    if two_a == 0 || two_a.is_multiple_of(2) {
        return f64::NAN;
    }
    let mut g = PI.sqrt();
    let mut a = 0.5;
    while 2.0 * a < two_a as f64 {
        g *= a;
        a += 1.0;
    }
    g
}
