//! Revolving-door enumeration of k-subsets.
//!
//! Successive subsets differ by exactly one element leaving and one entering,
//! so a running sum over the chosen rows is updated with two XORs per step.
//! This is Knuth's Algorithm R (TAOCP 7.2.1.3).

/// Stepper over every `k`-subset of `{0, …, n-1}` in revolving-door order.
///
/// [`RevolvingDoor::current`] is the first subset right after construction;
/// each [`RevolvingDoor::advance`] moves to the next one and reports the
/// `(left, entered)` pair, or `None` once all `C(n, k)` subsets were visited.
#[derive(Clone, Debug)]
pub struct RevolvingDoor {
    // c[1..=k] hold the subset, c[k+1] = n is a sentinel; c[0] is unused.
    c: Vec<usize>,
    k: usize,
    done: bool,
}

impl RevolvingDoor {
    /// Panics if `k > n`.
    pub fn new(n: usize, k: usize) -> Self {
        assert!(k <= n, "cannot choose {k} of {n}");
        let mut c: Vec<usize> = (0..=k + 1).map(|j| j.saturating_sub(1)).collect();
        c[k + 1] = n;
        RevolvingDoor { c, k, done: k == 0 || k == n }
    }

    pub fn current(&self) -> &[usize] {
        &self.c[1..=self.k]
    }

    pub fn advance(&mut self) -> Option<(usize, usize)> {
        if self.done {
            return None;
        }
        let (c, k) = (&mut self.c, self.k);
        // R3: easy cases move c[1] only.
        let mut increase;
        if k % 2 == 1 {
            if c[1] + 1 < c[2] {
                c[1] += 1;
                return Some((c[1] - 1, c[1]));
            }
            increase = false;
        } else {
            if c[1] > 0 {
                c[1] -= 1;
                return Some((c[1] + 1, c[1]));
            }
            increase = true;
        }
        let mut j = 2;
        while j <= k {
            if !increase {
                // R4: try to decrease c[j]; here c[j] = c[j-1] + 1.
                if c[j] >= j {
                    let out = c[j];
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    return Some((out, j - 2));
                }
            } else if c[j] + 1 < c[j + 1] {
                // R5: try to increase c[j]; here c[j-1] = j - 2.
                let out = c[j - 1];
                c[j - 1] = c[j];
                c[j] += 1;
                return Some((out, c[j]));
            }
            j += 1;
            increase = !increase;
        }
        self.done = true;
        None
    }
}

/// Binomial coefficient, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}
