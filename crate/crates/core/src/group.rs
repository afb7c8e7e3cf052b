//! Cayley-table groups.

use crate::config::Caps;
use crate::error::{GroupError, Result};
use serde::{Deserialize, Serialize};

/// A finite group stored as its full multiplication table.
///
/// Elements are the indices `0..order`. The identity is always index 0;
/// constructors renumber if needed.
#[derive(Clone)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    names: Option<Vec<String>>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {})", self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    order: usize,
    table: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates `table` (row `x`, column `y` holds `x*y`) and builds the group.
    ///
    /// If the identity is not index 0 the elements are renumbered so that it is
    /// (the identity swaps places with element 0).
    pub fn from_table(table: Vec<Vec<u32>>, caps: &Caps) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::NotAGroup { reason: "empty table".into(), witness: vec![] });
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotAGroup { reason: format!("row {i} has length {}", row.len()), witness: vec![i] });
            }
            for &v in row {
                if v as usize >= n {
                    return Err(GroupError::NotAGroup { reason: format!("entry {v} out of range"), witness: vec![i] });
                }
                flat.push(v);
            }
        }
        let check_assoc = caps.strict || n <= caps.assoc_check_max;
        Self::from_flat(n, flat, None, check_assoc)
    }

    /// Builds from a flat row-major table. Used by constructors whose output is
    /// a group by construction, so associativity is only checked on request.
    pub(crate) fn from_flat(n: usize, mut flat: Vec<u32>, mut names: Option<Vec<String>>, check_assoc: bool) -> Result<Self> {
        let mut seen = vec![0u32; n];
        for x in 0..n {
            let stamp = 2 * x as u32 + 1;
            for y in 0..n {
                let v = flat[x * n + y] as usize;
                if seen[v] == stamp {
                    return Err(GroupError::NotAGroup { reason: "row is not a permutation".into(), witness: vec![x, y] });
                }
                seen[v] = stamp;
            }
        }
        for y in 0..n {
            let stamp = 2 * y as u32 + 2;
            for x in 0..n {
                let v = flat[x * n + y] as usize;
                if seen[v] == stamp {
                    return Err(GroupError::NotAGroup { reason: "column is not a permutation".into(), witness: vec![x, y] });
                }
                seen[v] = stamp;
            }
        }
        let e = (0..n)
            .find(|&x| (0..n).all(|y| flat[x * n + y] as usize == y && flat[y * n + x] as usize == y))
            .ok_or_else(|| GroupError::NotAGroup { reason: "no two-sided identity".into(), witness: vec![] })?;
        if e != 0 {
            let perm: Vec<u32> = (0..n as u32)
                .map(|x| if x == 0 { e as u32 } else if x as usize == e { 0 } else { x })
                .collect();
            let mut renum = vec![0u32; n * n];
            for x in 0..n {
                for y in 0..n {
                    renum[perm[x] as usize * n + perm[y] as usize] = perm[flat[x * n + y] as usize];
                }
            }
            flat = renum;
            if let Some(ns) = names.as_mut() {
                ns.swap(0, e);
            }
        }
        let mut inv = vec![u32::MAX; n];
        for x in 0..n {
            for y in 0..n {
                if flat[x * n + y] == 0 {
                    inv[x] = y as u32;
                    break;
                }
            }
        }
        for x in 0..n {
            if flat[inv[x] as usize * n + x] != 0 {
                return Err(GroupError::NotAGroup { reason: "left and right inverses differ".into(), witness: vec![x] });
            }
        }
        let g = FiniteGroup { n, table: flat, inv, names };
        if check_assoc {
            g.check_associative()?;
        }
        Ok(g)
    }

    fn check_associative(&self) -> Result<()> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(x as u32, y as u32);
                for z in 0..n {
                    let l = self.mul(xy, z as u32);
                    let r = self.mul(x as u32, self.mul(y as u32, z as u32));
                    if l != r {
                        return Err(GroupError::NotAGroup { reason: "associativity fails".into(), witness: vec![x, y, z] });
                    }
                }
            }
        }
        Ok(())
    }

    /// Builds a group from a closed multiplication rule on `0..n`; the rule is
    /// trusted to be associative.
    pub fn from_fn(n: usize, names: Option<Vec<String>>, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let mut flat = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                flat.push(mul(x, y) as u32);
            }
        }
        Self::from_flat(n, flat, names, n <= 64)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.n + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: u32) -> u32 {
        self.inv[x as usize]
    }

    pub fn identity(&self) -> u32 {
        0
    }

    /// Row `x` of the table: `y -> x*y`.
    #[inline]
    pub fn row(&self, x: u32) -> &[u32] {
        let s = x as usize * self.n;
        &self.table[s..s + self.n]
    }

    pub fn conj(&self, x: u32, g: u32) -> u32 {
        // x^g = g^-1 x g
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn commutator(&self, x: u32, y: u32) -> u32 {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn pow(&self, x: u32, mut k: u64) -> u32 {
        let mut acc = 0u32;
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: u32) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.n as u32).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n as u32).all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    pub fn name(&self, x: u32) -> String {
        match &self.names {
            Some(ns) => ns[x as usize].clone(),
            None => format!("g{x}"),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        if names.len() == self.n {
            self.names = Some(names);
        }
        self
    }

    pub fn table_rows(&self) -> Vec<Vec<u32>> {
        self.table.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupJson { order: self.n, table: self.table_rows(), names: self.names.clone() })
            .expect("group serialisation")
    }

    pub fn from_json(s: &str, caps: &Caps) -> Result<Self> {
        let gj: GroupJson = serde_json::from_str(s).map_err(|e| GroupError::Parse(e.to_string()))?;
        if gj.order != gj.table.len() {
            return Err(GroupError::Parse(format!("order {} but {} rows", gj.order, gj.table.len())));
        }
        let g = Self::from_table(gj.table, caps)?;
        Ok(match gj.names {
            Some(ns) => g.with_names(ns),
            None => g,
        })
    }

    /// Returns the subgroup generated by `gens` as a sorted element list.
    pub fn generated(&self, gens: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.n];
        let mut out = vec![0u32];
        seen[0] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }

    /// Whether `gens` generate the whole group. Stops as soon as more than
    /// half the group has been reached.
    pub fn generates(&self, gens: &[u32]) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut out = vec![0u32];
        seen[0] = true;
        let mut i = 0;
        while i < out.len() {
            let x = out[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y as usize] {
                    seen[y as usize] = true;
                    out.push(y);
                    if 2 * out.len() > self.n {
                        return true;
                    }
                }
            }
            i += 1;
        }
        out.len() == self.n
    }

    /// A short generating sequence, found greedily by taking elements of
    /// largest order first.
    pub fn small_generating_set(&self) -> Vec<u32> {
        let orders = self.element_orders();
        let mut els: Vec<u32> = (1..self.n as u32).collect();
        els.sort_by_key(|&x| (std::cmp::Reverse(orders[x as usize]), x));
        let mut gens = Vec::new();
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut size = 1;
        for x in els {
            if size == self.n {
                break;
            }
            if !inside[x as usize] {
                gens.push(x);
                let h = self.generated(&gens);
                size = h.len();
                inside.iter_mut().for_each(|b| *b = false);
                for y in h {
                    inside[y as usize] = true;
                }
            }
        }
        gens
    }

    /// Conjugacy classes, each sorted, listed by least member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<u32>> {
        let gens = self.small_generating_set();
        let mut cls = vec![u32::MAX; self.n];
        let mut out: Vec<Vec<u32>> = Vec::new();
        for x in 0..self.n as u32 {
            if cls[x as usize] != u32::MAX {
                continue;
            }
            let id = out.len() as u32;
            let mut c = vec![x];
            cls[x as usize] = id;
            let mut i = 0;
            while i < c.len() {
                let y = c[i];
                for &g in &gens {
                    let z = self.conj(y, g);
                    if cls[z as usize] == u32::MAX {
                        cls[z as usize] = id;
                        c.push(z);
                    }
                }
                i += 1;
            }
            c.sort_unstable();
            out.push(c);
        }
        out
    }
}
