//! Deterministic greedy hitting set (greedy set cover on the dual family).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Greedy hitting set for a family of subsets of `0..n`: repeatedly takes the
/// element hitting the most not-yet-hit sets, smallest id among ties, until
/// every nonempty set is hit. Returns the chosen elements sorted ascending.
///
/// For `n` sets of size `s` the result has at most `(n / s) * (1 + ln n)`
/// elements, the usual greedy set-cover bound.
pub fn greedy_hitting_set<S: AsRef<[usize]>>(n: usize, family: &[S]) -> Vec<usize> {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, set) in family.iter().enumerate() {
        for &x in set.as_ref() {
            containing[x].push(i);
        }
    }
    let mut count: Vec<usize> = containing.iter().map(Vec::len).collect();
    let mut hit = vec![false; family.len()];
    let mut remaining = family.iter().filter(|s| !s.as_ref().is_empty()).count();

    // Stored counts only ever overestimate, so a popped entry whose count is
    // still current is a true maximum; the id key settles ties towards
    // smaller ids.
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = count
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(x, &c)| (c, Reverse(x)))
        .collect();
    let mut chosen = Vec::new();
    while remaining > 0 {
        let (c, Reverse(x)) = heap.pop().expect("an element hits every remaining set");
        if c != count[x] {
            if count[x] > 0 {
                heap.push((count[x], Reverse(x)));
            }
            continue;
        }
        chosen.push(x);
        for &i in &containing[x] {
            if !hit[i] {
                hit[i] = true;
                remaining -= 1;
                for &y in family[i].as_ref() {
                    count[y] -= 1;
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}
