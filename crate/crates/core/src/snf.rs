//! Smith normal form over Z (small matrices) and over Z/e.

#![allow(clippy::needless_range_loop)]

pub type Mat = Vec<Vec<i64>>;

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Inverse of a modulo m, for gcd(a, m) = 1.
pub fn inv_mod(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "not invertible");
    s0.rem_euclid(m)
}

/// U A V = diag(d) over Z with d_1 | d_2 | ... and all four transforms.
#[derive(Clone, Debug)]
pub struct IntSnf {
    pub diag: Vec<i64>,
    pub u: Mat,
    pub u_inv: Mat,
    pub v: Mat,
    pub v_inv: Mat,
}

pub fn smith_int(a: &Mat, cols: usize) -> IntSnf {
    let m = a.len();
    let n = cols;
    let mut a: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let id = |k: usize| -> Vec<Vec<i128>> {
        (0..k).map(|i| (0..k).map(|j| i128::from(i == j)).collect()).collect()
    };
    let (mut u, mut u_inv, mut v, mut v_inv) = (id(m), id(m), id(n), id(n));

    // row_i += c * row_j
    let row_add = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, ui: &mut Vec<Vec<i128>>, i: usize, j: usize, c: i128| {
        for k in 0..a[0].len() {
            a[i][k] += c * a[j][k];
        }
        for k in 0..u[0].len() {
            u[i][k] += c * u[j][k];
        }
        for row in ui.iter_mut() {
            row[j] -= c * row[i];
        }
    };
    // col_i += c * col_j
    let col_add = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, vi: &mut Vec<Vec<i128>>, i: usize, j: usize, c: i128| {
        for row in a.iter_mut() {
            row[i] += c * row[j];
        }
        for row in v.iter_mut() {
            row[i] += c * row[j];
        }
        for k in 0..vi[0].len() {
            vi[j][k] -= c * vi[i][k];
        }
    };
    let row_swap = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, ui: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        a.swap(i, j);
        u.swap(i, j);
        for row in ui.iter_mut() {
            row.swap(i, j);
        }
    };
    let col_swap = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, vi: &mut Vec<Vec<i128>>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in v.iter_mut() {
            row.swap(i, j);
        }
        vi.swap(i, j);
    };

    let r = m.min(n);
    for t in 0..r {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            row_swap(&mut a, &mut u, &mut u_inv, t, bi);
            col_swap(&mut a, &mut v, &mut v_inv, t, bj);
            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    row_add(&mut a, &mut u, &mut u_inv, i, t, -q);
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..n {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    col_add(&mut a, &mut v, &mut v_inv, j, t, -q);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let p = a[t][t];
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => row_add(&mut a, &mut u, &mut u_inv, t, i, 1),
                None => break,
            }
        }
        if a.get(t).is_some_and(|row| row[t] < 0) {
            for k in 0..n {
                a[t][k] = -a[t][k];
            }
            for k in 0..m {
                u[t][k] = -u[t][k];
            }
            for row in u_inv.iter_mut() {
                row[t] = -row[t];
            }
        }
    }
    let cv = |x: Vec<Vec<i128>>| -> Mat {
        x.into_iter().map(|r| r.into_iter().map(|y| i64::try_from(y).expect("entry overflow")).collect()).collect()
    };
    let diag = (0..r).map(|t| i64::try_from(a[t][t]).expect("entry overflow")).collect();
    IntSnf { diag, u: cv(u), u_inv: cv(u_inv), v: cv(v), v_inv: cv(v_inv) }
}

/// Diagonalization U A V = diag(d) over Z/e. U is kept only on request.
#[derive(Clone, Debug)]
pub struct ModSnf {
    pub e: i64,
    pub rows: usize,
    pub cols: usize,
    pub diag: Vec<i64>,
    pub u: Option<Mat>,
    pub v: Mat,
}

impl ModSnf {
    pub fn new(a: &Mat, cols: usize, e: i64, keep_u: bool) -> Self {
        let m = a.len();
        let n = cols;
        let mut a: Mat = a.iter().map(|r| r.iter().map(|&x| x.rem_euclid(e)).collect()).collect();
        let mut u = keep_u.then(|| identity(m));
        let mut v = identity(n);
        let mut diag = Vec::new();
        let md = |x: i64| x.rem_euclid(e);
        let r = m.min(n);
        for t in 0..r {
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(bi, bj)| x < a[bi][bj]) {
                        best = Some((i, j));
                        if x == 1 {
                            break;
                        }
                    }
                }
                if best.is_some_and(|(bi, bj)| a[bi][bj] == 1) {
                    break;
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            if let Some(u) = u.as_mut() {
                u.swap(t, bi);
            }
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
            for row in v.iter_mut() {
                row.swap(t, bj);
            }
            loop {
                let p = a[t][t];
                let mut clean = true;
                let pivot_row: Vec<(usize, i64)> =
                    (t..n).filter(|&j| a[t][j] != 0).map(|j| (j, a[t][j])).collect();
                let u_row = u.as_ref().map(|u| u[t].clone());
                for i in t + 1..m {
                    let x = a[i][t];
                    if x == 0 {
                        continue;
                    }
                    let q = x / p;
                    for &(j, y) in &pivot_row {
                        a[i][j] = md(a[i][j] - q * y);
                    }
                    if let (Some(u), Some(ur)) = (u.as_mut(), u_row.as_ref()) {
                        for (k, &y) in ur.iter().enumerate() {
                            if y != 0 {
                                u[i][k] = md(u[i][k] - q * y);
                            }
                        }
                    }
                    clean &= a[i][t] == 0;
                }
                for j in t + 1..n {
                    let x = a[t][j];
                    if x == 0 {
                        continue;
                    }
                    let q = x / p;
                    for row in a.iter_mut().skip(t) {
                        let y = row[t];
                        if y != 0 {
                            row[j] = md(row[j] - q * y);
                        }
                    }
                    for row in v.iter_mut() {
                        let y = row[t];
                        if y != 0 {
                            row[j] = md(row[j] - q * y);
                        }
                    }
                    clean &= a[t][j] == 0;
                }
                if clean {
                    break;
                }
                // bring the smallest leftover in row t or column t to the pivot
                let mut best = (t, t, p);
                for i in t + 1..m {
                    if a[i][t] != 0 && a[i][t] < best.2 {
                        best = (i, t, a[i][t]);
                    }
                }
                for j in t + 1..n {
                    if a[t][j] != 0 && a[t][j] < best.2 {
                        best = (t, j, a[t][j]);
                    }
                }
                let (bi, bj, _) = best;
                if bi != t {
                    a.swap(t, bi);
                    if let Some(u) = u.as_mut() {
                        u.swap(t, bi);
                    }
                }
                if bj != t {
                    for row in a.iter_mut() {
                        row.swap(t, bj);
                    }
                    for row in v.iter_mut() {
                        row.swap(t, bj);
                    }
                }
            }
            diag.push(a[t][t]);
        }
        ModSnf { e, rows: m, cols: n, diag, u, v }
    }

    /// Generators of {x : A x = 0 mod e}, as vectors.
    pub fn kernel(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        for j in 0..self.cols {
            let factor = match self.diag.get(j) {
                Some(&d) => self.e / gcd(d, self.e),
                None => 1,
            };
            if factor == self.e {
                continue;
            }
            out.push(self.v.iter().map(|row| (row[j] * factor).rem_euclid(self.e)).collect());
        }
        out
    }

    /// Some x with A x = b mod e. Requires U.
    pub fn solve(&self, b: &[i64]) -> Option<Vec<i64>> {
        let u = self.u.as_ref().expect("solve needs U");
        let e = self.e;
        let rhs: Vec<i64> = u
            .iter()
            .map(|row| {
                row.iter()
                    .zip(b)
                    .fold(0i64, |acc, (&x, &y)| if x == 0 { acc } else { (acc + x * y).rem_euclid(e) })
            })
            .collect();
        let mut y = vec![0i64; self.cols];
        for (i, &r) in rhs.iter().enumerate() {
            match self.diag.get(i) {
                Some(&d) => {
                    let g = gcd(d, e);
                    if r % g != 0 {
                        return None;
                    }
                    let m = e / g;
                    y[i] = if m == 1 { 0 } else { ((r / g) % m * inv_mod(d / g, m)).rem_euclid(m) };
                }
                None => {
                    if r != 0 {
                        return None;
                    }
                }
            }
        }
        Some(
            self.v
                .iter()
                .map(|row| row.iter().zip(&y).fold(0i64, |acc, (&x, &t)| (acc + x * t).rem_euclid(e)))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mul(a: &Mat, b: &Mat) -> Mat {
        let n = b[0].len();
        a.iter()
            .map(|r| (0..n).map(|j| r.iter().zip(b).map(|(&x, row)| x * row[j]).sum()).collect())
            .collect()
    }

    #[test]
    fn integer_snf_transforms() {
        let a: Mat = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
        let s = smith_int(&a, 3);
        assert_eq!(s.diag, vec![2, 6, 12]);
        let d = mul(&mul(&s.u, &a), &s.v);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d[i][j], if i == j { s.diag[i] } else { 0 });
            }
        }
        assert_eq!(mul(&s.u, &s.u_inv), identity(3));
        assert_eq!(mul(&s.v, &s.v_inv), identity(3));
    }

    #[test]
    fn modular_solve_and_kernel() {
        // 2x = 2 mod 4 has solutions, 2x = 1 mod 4 does not
        let s = ModSnf::new(&vec![vec![2]], 1, 4, true);
        let x = s.solve(&[2]).unwrap();
        assert_eq!((2 * x[0]).rem_euclid(4), 2);
        assert!(s.solve(&[1]).is_none());
        assert_eq!(s.kernel(), vec![vec![2]]);
    }

    #[test]
    fn modular_solve_random_systems() {
        let e = 12;
        let a: Mat = vec![vec![3, 4, 0, 5], vec![6, 2, 8, 1], vec![0, 9, 3, 3]];
        let s = ModSnf::new(&a, 4, e, true);
        for seed in 0..50i64 {
            let x: Vec<i64> = (0..4).map(|k| (seed * 7 + k * 5 + seed * k) % e).collect();
            let b: Vec<i64> = a.iter().map(|r| r.iter().zip(&x).map(|(p, q)| p * q).sum::<i64>() % e).collect();
            let y = s.solve(&b).unwrap();
            let b2: Vec<i64> = a.iter().map(|r| r.iter().zip(&y).map(|(p, q)| p * q).sum::<i64>() % e).collect();
            assert_eq!(b, b2);
        }
        for k in s.kernel() {
            assert!(a.iter().all(|r| r.iter().zip(&k).map(|(p, q)| p * q).sum::<i64>() % e == 0));
        }
    }
}
