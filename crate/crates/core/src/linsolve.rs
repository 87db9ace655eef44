//! Linear systems `A x = b` over `Z/n`.
//!
//! The matrix is diagonalized by invertible 2x2 row and column transforms
//! built from extended gcds, so no factorization of `n` is needed.

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, s, t) = egcd(b, a % b);
        (g, t, s - (a / b) * t)
    }
}

fn norm(x: i128, n: u64) -> u64 {
    x.rem_euclid(n as i128) as u64
}

fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Coefficients `(s, u, p, q)` of a determinant-one transform sending `(a, b)` to `(gcd, 0)`.
fn transform(a: u64, b: u64, n: u64) -> (u64, u64, u64, u64) {
    if a != 0 && b.is_multiple_of(a) {
        return (1, 0, norm(-((b / a) as i128), n), 1);
    }
    let (g, s, u) = egcd(a as i128, b as i128);
    (norm(s, n), norm(u, n), norm(-(b as i128 / g), n), norm(a as i128 / g, n))
}

fn combine(x: u64, y: u64, c: (u64, u64), n: u64) -> u64 {
    ((mulmod(c.0, x, n) as u128 + mulmod(c.1, y, n) as u128) % n as u128) as u64
}

/// Some solution of `a x = b` modulo `n`, or `None` when the system is inconsistent.
pub(crate) fn solve_mod(n: u64, mut a: Vec<Vec<u64>>, mut b: Vec<u64>) -> Option<Vec<u64>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    if n == 1 {
        return Some(vec![0; cols]);
    }
    let mut v: Vec<Vec<u64>> = (0..cols).map(|i| (0..cols).map(|j| u64::from(i == j)).collect()).collect();
    let mut rank = 0;
    while rank < rows.min(cols) {
        let t = rank;
        let Some((r, c)) = (t..rows).flat_map(|r| (t..cols).map(move |c| (r, c))).find(|&(r, c)| a[r][c] != 0) else {
            break;
        };
        a.swap(t, r);
        b.swap(t, r);
        for row in a.iter_mut().chain(v.iter_mut()) {
            row.swap(t, c);
        }
        loop {
            for r in t + 1..rows {
                if a[r][t] != 0 {
                    let (s, u, p, q) = transform(a[t][t], a[r][t], n);
                    let (top, bottom) = a.split_at_mut(r);
                    for (x, y) in top[t].iter_mut().zip(bottom[0].iter_mut()) {
                        (*x, *y) = (combine(*x, *y, (s, u), n), combine(*x, *y, (p, q), n));
                    }
                    let (x, y) = (b[t], b[r]);
                    b[t] = combine(x, y, (s, u), n);
                    b[r] = combine(x, y, (p, q), n);
                }
            }
            for c in t + 1..cols {
                if a[t][c] != 0 {
                    let (s, u, p, q) = transform(a[t][t], a[t][c], n);
                    for row in a.iter_mut().chain(v.iter_mut()) {
                        let (x, y) = (row[t], row[c]);
                        row[t] = combine(x, y, (s, u), n);
                        row[c] = combine(x, y, (p, q), n);
                    }
                }
            }
            if (t + 1..rows).all(|r| a[r][t] == 0) {
                break;
            }
        }
        rank += 1;
    }
    let mut y = vec![0u64; cols];
    for t in 0..rows {
        if t >= rank {
            if b[t] != 0 {
                return None;
            }
            continue;
        }
        let d = a[t][t];
        let (g, _, _) = egcd(d as i128, n as i128);
        let g = g as u64;
        if !b[t].is_multiple_of(g) {
            return None;
        }
        let m = n / g;
        let (_, inv, _) = egcd((d / g) as i128, m as i128);
        y[t] = mulmod(b[t] / g % m, norm(inv, m), m);
    }
    Some(
        (0..cols)
            .map(|i| (0..cols).fold(0u64, |acc, j| ((acc as u128 + mulmod(v[i][j], y[j], n) as u128) % n as u128) as u64))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check(n: u64, a: &[Vec<u64>], b: &[u64], x: &[u64]) -> bool {
        a.iter().zip(b).all(|(row, &bi)| row.iter().zip(x).fold(0, |acc, (&p, &q)| (acc + p * q) % n) == bi % n)
    }

    fn brute(n: u64, a: &[Vec<u64>], b: &[u64], cols: usize) -> bool {
        let total = n.pow(cols as u32);
        (0..total).any(|mut k| {
            let x: Vec<u64> = (0..cols)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect();
            check(n, a, b, &x)
        })
    }

    #[test]
    fn small_systems() {
        assert_eq!(solve_mod(5, vec![vec![0, 1], vec![1, 1]], vec![1, 0]), Some(vec![4, 1]));
        assert_eq!(solve_mod(4, vec![vec![2]], vec![1]), None);
        let x = solve_mod(12, vec![vec![4, 6]], vec![2]).unwrap();
        assert!(check(12, &[vec![4, 6]], &[2], &x));
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(
            n in 2u64..13,
            rows in 1usize..4,
            cols in 1usize..4,
            seed in proptest::collection::vec(0u64..1000, 16),
        ) {
            let a: Vec<Vec<u64>> = (0..rows).map(|r| (0..cols).map(|c| seed[r * 4 + c] % n).collect()).collect();
            let b: Vec<u64> = (0..rows).map(|r| seed[12 + r] % n).collect();
            match solve_mod(n, a.clone(), b.clone()) {
                Some(x) => prop_assert!(check(n, &a, &b, &x)),
                None => prop_assert!(!brute(n, &a, &b, cols)),
            }
        }
    }
}
