use crate::exact::Rational;

/// Solves `A x = b` exactly by row reduction. `a` is row-major with `cols`
/// columns. Returns one solution (free variables set to zero) or `None` when
/// the system is inconsistent.
pub(crate) fn solve(
    mut a: Vec<Vec<Rational>>,
    mut b: Vec<Rational>,
    cols: usize,
) -> Option<Vec<Rational>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        b.swap(row, p);
        let inv = a[row][col].recip().expect("pivot is nonzero");
        for v in &mut a[row][col..cols] {
            *v = &*v * &inv;
        }
        b[row] = &b[row] * &inv;
        for r in 0..rows {
            if r == row || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            let pivot_row = a[row].clone();
            for (v, p) in a[r][col..cols].iter_mut().zip(&pivot_row[col..cols]) {
                *v -= &f * p;
            }
            let d = &f * &b[row];
            b[r] -= d;
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if b[row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = b[r].clone();
    }
    Some(x)
}
