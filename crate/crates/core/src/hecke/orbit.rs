use super::matrix::IntMat2;

/// Canonical representative `[[a, b], [0, d]]`, `a, d > 0`, `0 <= b < a`, of
/// the right orbit `M * SL_2(Z)`.
///
/// The bottom row is cleared with determinant-one column operations
/// (extended Euclid), then `b` is reduced modulo `a`.
pub fn orbit_canonical(m: &IntMat2) -> IntMat2 {
    debug_assert!(m.det() > 0);
    // Columns (top, bottom); run Euclid on the bottom entries.
    let (mut col1, mut col2) = ((m.a, m.c), (m.b, m.d));
    while col1.1 != 0 {
        // col2 -= q col1, then swap with a sign so the determinant stays fixed.
        let q = col2.1.div_euclid(col1.1);
        col2 = (col2.0 - q * col1.0, col2.1 - q * col1.1);
        (col1, col2) = ((-col2.0, -col2.1), col1);
    }
    // bottom row is now (0, g); force g > 0 with -I
    if col2.1 < 0 {
        col1 = (-col1.0, -col1.1);
        col2 = (-col2.0, -col2.1);
    }
    let (a, d) = (col1.0, col2.1);
    debug_assert!(a > 0 && d > 0);
    IntMat2::from_entries(a, col2.0.rem_euclid(a), 0, d)
}
