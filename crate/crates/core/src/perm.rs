//! Small permutations of `0..d` stored as image vectors.

pub type Perm = Vec<usize>;

pub fn identity(d: usize) -> Perm {
    (0..d).collect()
}

/// `p ∘ q`: apply `q` first.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&x| p[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    crate::map::inverse(p)
}

pub fn transposition(d: usize, a: usize, b: usize) -> Perm {
    let mut p = identity(d);
    p.swap(a, b);
    p
}

/// The two moved points if `p` is a transposition.
pub fn as_transposition(p: &[usize]) -> Option<(usize, usize)> {
    let moved: Vec<usize> = (0..p.len()).filter(|&i| p[i] != i).collect();
    match moved[..] {
        [a, b] if p[a] == b => Some((a, b)),
        _ => None,
    }
}

pub fn cycle_count(p: &[usize]) -> usize {
    crate::map::cycles_of(p).len()
}

/// All transpositions `(a, b)` with `a < b`, lexicographically.
pub fn all_transpositions(d: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            out.push((a, b));
        }
    }
    out
}

/// Whether the transpositions generate a transitive group on `0..d`.
pub fn transitive(d: usize, pairs: &[(usize, usize)]) -> bool {
    let mut parent: Vec<usize> = (0..d).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut groups = d;
    for &(a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            groups -= 1;
        }
    }
    groups <= 1
}

/// Every permutation of `0..d` in lexicographic order.
pub fn all_permutations(d: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p = identity(d);
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (0..d.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..d).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

/// Image of a transposition under conjugation by `g`, normalized `a < b`.
pub fn conjugate_pair(g: &[usize], (a, b): (usize, usize)) -> (usize, usize) {
    let (x, y) = (g[a], g[b]);
    (x.min(y), x.max(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let p = vec![1, 2, 0];
        let q = vec![0, 2, 1];
        assert_eq!(compose(&p, &q), vec![1, 0, 2]);
        assert_eq!(compose(&p, &inverse(&p)), identity(3));
    }

    #[test]
    fn transposition_detection() {
        assert_eq!(as_transposition(&transposition(4, 1, 3)), Some((1, 3)));
        assert_eq!(as_transposition(&identity(4)), None);
        assert_eq!(as_transposition(&[1, 2, 0]), None);
    }

    #[test]
    fn counts() {
        assert_eq!(all_transpositions(4).len(), 6);
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(cycle_count(&identity(5)), 5);
        assert!(transitive(3, &[(0, 1), (1, 2)]));
        assert!(!transitive(4, &[(0, 1), (2, 3)]));
    }
}
