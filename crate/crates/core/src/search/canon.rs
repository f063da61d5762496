//! Canonical codes for fully colored two-color prefixes on at most six
//! vertices, by brute force over all vertex permutations.

use std::collections::HashSet;

pub const MAX_PREFIX: usize = 6;

fn permutations(m: usize) -> Vec<Vec<u8>> {
    fn rec(cur: &mut Vec<u8>, used: &mut [bool], m: usize, out: &mut Vec<Vec<u8>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 0..m {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                rec(cur, used, m, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], m, &mut out);
    out
}

/// Remembers which prefixes (up to isomorphism) the search already explored.
pub struct IsoFilter {
    perms: Vec<Vec<Vec<u8>>>,
    seen: Vec<HashSet<u32>>,
}

impl Default for IsoFilter {
    fn default() -> Self {
        Self::new()
    }
}

impl IsoFilter {
    pub fn new() -> Self {
        IsoFilter {
            perms: (0..=MAX_PREFIX).map(permutations).collect(),
            seen: vec![HashSet::new(); MAX_PREFIX + 1],
        }
    }

    /// Minimum over relabelings of the color-1 adjacency restricted to
    /// vertices `0..m`, packed in colex pair order.
    pub fn canonical(&self, color1: &[u64], m: usize) -> u32 {
        let mut best = u32::MAX;
        for perm in &self.perms[m] {
            let mut code = 0u32;
            let mut bit = 0;
            for y in 1..m {
                let py = perm[y] as usize;
                for x in 0..y {
                    if color1[perm[x] as usize] >> py & 1 == 1 {
                        code |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            best = best.min(code);
        }
        best
    }

    /// Records the prefix on `0..m`; false if an isomorphic one was already seen.
    pub fn insert(&mut self, color1: &[u64], m: usize) -> bool {
        let code = self.canonical(color1, m);
        self.seen[m].insert(code)
    }
}
