//! Named group families.
//!
//! Spec strings are colon separated (`family:param:param`); `A*B` is the
//! direct product. Orderings, identity always first:
//!
//! * `cyclic:n` — `i` is `g^i`.
//! * `dihedral:n` — order `2n`, `i + n*j` is `r^i s^j`.
//! * `sym:n`, `alt:n` — permutations of `0..n` in lexicographic order;
//!   `p*q` applies `p` first.
//! * `elemab:p:k`, `klein` — vectors with index `sum v_i p^i`.
//! * `sdp:m:n:r` — `C_m ⋊ C_n`, `i + m*j` is `x^i y^j`, `y x y^-1 = x^r`.
//! * `dicyclic:n` — order `4n`, `i + 2n*j` is `a^i x^j`, `x^2 = a^n`.
//! * `sl2:q`, `gl2:q` (q ∈ {2,4}) — matrices sorted by entries, identity moved
//!   to the front.

use crate::config::Caps;
use crate::error::{GroupError, Result};
use crate::group::FiniteGroup;
use crate::products::direct_product;

fn param(parts: &[&str], i: usize, spec: &str) -> Result<usize> {
    parts
        .get(i)
        .ok_or_else(|| GroupError::Parse(format!("`{spec}`: missing parameter {i}")))?
        .trim()
        .parse::<usize>()
        .map_err(|_| GroupError::Parse(format!("`{spec}`: parameter {i} is not an integer")))
}

/// Parses a spec string into a group.
pub fn group_builtin(spec: &str, caps: &Caps) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if spec.contains('*') {
        let mut acc: Option<FiniteGroup> = None;
        for part in spec.split('*') {
            let g = group_builtin(part, caps)?;
            acc = Some(match acc {
                None => g,
                Some(a) => {
                    let n = a.order() as u128 * g.order() as u128;
                    crate::error::cap_check("product order", n, caps.max_vertices as u128)?;
                    direct_product(&a, &g)
                }
            });
        }
        return acc.ok_or_else(|| GroupError::Parse("empty product".into()));
    }
    let parts: Vec<&str> = spec.split(':').collect();
    let fam = parts[0].trim().to_ascii_lowercase();
    let order_cap = caps.max_vertices as u128;
    match fam.as_str() {
        "trivial" => Ok(cyclic(1)),
        "cyclic" | "c" => {
            let n = param(&parts, 1, spec)?;
            if n == 0 {
                return Err(GroupError::ParameterOutOfRange("cyclic:0".into()));
            }
            crate::error::cap_check("order", n as u128, order_cap)?;
            Ok(cyclic(n))
        }
        "dihedral" | "d" => {
            let n = param(&parts, 1, spec)?;
            if n == 0 {
                return Err(GroupError::ParameterOutOfRange("dihedral:0".into()));
            }
            crate::error::cap_check("order", 2 * n as u128, order_cap)?;
            Ok(dihedral(n))
        }
        "sym" | "alt" => {
            let n = param(&parts, 1, spec)?;
            let fact: u128 = (1..=n as u128).product();
            let ord = if fam == "alt" && n >= 2 { fact / 2 } else { fact };
            if n > 7 || ord > order_cap {
                return Err(GroupError::ParameterOutOfRange(format!("{fam}:{n} has order {ord}")));
            }
            Ok(permutation_group(n, fam == "alt"))
        }
        "klein" => Ok(elementary_abelian(2, 2)),
        "elemab" => {
            let p = param(&parts, 1, spec)?;
            let k = param(&parts, 2, spec)?;
            if !crate::arith::is_prime(p as u64) {
                return Err(GroupError::ParameterOutOfRange(format!("{p} is not prime")));
            }
            let ord = (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
            crate::error::cap_check("order", ord, order_cap)?;
            Ok(elementary_abelian(p, k))
        }
        "sdp" => {
            let m = param(&parts, 1, spec)?;
            let n = param(&parts, 2, spec)?;
            let r = param(&parts, 3, spec)?;
            cyclic_semidirect(m, n, r)
        }
        "dicyclic" => {
            let n = param(&parts, 1, spec)?;
            if n == 0 {
                return Err(GroupError::ParameterOutOfRange("dicyclic:0".into()));
            }
            Ok(dicyclic(n))
        }
        "quaternion" => Ok(dicyclic(2)),
        "sl2" | "gl2" => {
            let q = param(&parts, 1, spec)?;
            if q != 2 && q != 4 {
                return Err(GroupError::ParameterOutOfRange(format!("{fam}:{q}: only q = 2, 4")));
            }
            Ok(matrix_group(q, fam == "sl2"))
        }
        _ => Err(GroupError::UnknownFamily(fam)),
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    let names = (0..n).map(|i| if i == 0 { "1".to_string() } else { format!("g^{i}") }).collect();
    FiniteGroup::from_fn(n, Some(names), |x, y| (x + y) % n).expect("cyclic group")
}

pub fn dihedral(n: usize) -> FiniteGroup {
    let names = (0..2 * n)
        .map(|k| {
            let (i, j) = (k % n, k / n);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => format!("r^{i}"),
                (0, _) => "s".to_string(),
                (i, _) => format!("r^{i}s"),
            }
        })
        .collect();
    FiniteGroup::from_fn(2 * n, Some(names), |x, y| {
        let (i, a) = (x % n, x / n);
        let (k, b) = (y % n, y / n);
        let k = if a == 1 { (n - k) % n } else { k };
        (i + k) % n + n * ((a + b) % 2)
    })
    .expect("dihedral group")
}

fn perm_sign(p: &[usize]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn cycle_name(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for i in 0..p.len() {
        if seen[i] || p[i] == i {
            continue;
        }
        s.push('(');
        let mut j = i;
        let mut first = true;
        while !seen[j] {
            seen[j] = true;
            if !first {
                s.push(' ');
            }
            s.push_str(&(j + 1).to_string());
            first = false;
            j = p[j];
        }
        s.push(')');
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Builds a group from a list of distinct permutations closed under
/// composition, the first being the identity.
pub fn group_from_permutations(perms: &[Vec<usize>]) -> Result<FiniteGroup> {
    let index: std::collections::HashMap<&[usize], usize> =
        perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let names = perms.iter().map(|p| cycle_name(p)).collect();
    let n = perms.len();
    let mut flat = Vec::with_capacity(n * n);
    let mut buf = vec![0usize; perms.first().map_or(0, |p| p.len())];
    for p in perms {
        for q in perms {
            for (i, b) in buf.iter_mut().enumerate() {
                *b = q[p[i]];
            }
            let k = *index
                .get(buf.as_slice())
                .ok_or_else(|| GroupError::NotAGroup { reason: "permutations not closed".into(), witness: vec![] })?;
            flat.push(k as u32);
        }
    }
    FiniteGroup::from_flat(n, flat, Some(names), n <= 64)
}

pub fn permutation_group(n: usize, even_only: bool) -> FiniteGroup {
    let perms: Vec<Vec<usize>> = all_perms(n).into_iter().filter(|p| !even_only || perm_sign(p)).collect();
    group_from_permutations(&perms).expect("symmetric group")
}

pub fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
    let n = p.pow(k as u32);
    FiniteGroup::from_fn(n, None, |x, y| {
        let (mut a, mut b, mut out, mut w) = (x, y, 0, 1);
        for _ in 0..k {
            out += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
            w *= p;
        }
        out
    })
    .expect("elementary abelian group")
}

/// `C_m ⋊ C_n` with `y x y^-1 = x^r`.
pub fn cyclic_semidirect(m: usize, n: usize, r: usize) -> Result<FiniteGroup> {
    if m == 0 || n == 0 {
        return Err(GroupError::ParameterOutOfRange("sdp with a zero order".into()));
    }
    let r = r % m.max(1);
    if m > 1 && num_integer::gcd(r, m) != 1 {
        return Err(GroupError::ActionNotHomomorphism(format!("{r} is not a unit mod {m}")));
    }
    let mut rp = vec![1usize % m.max(1); n + 1];
    for j in 1..=n {
        rp[j] = rp[j - 1] * r % m.max(1);
    }
    if m > 1 && rp[n] != 1 {
        return Err(GroupError::ActionNotHomomorphism(format!("{r}^{n} is not 1 mod {m}")));
    }
    let names = (0..m * n)
        .map(|k| {
            let (i, j) = (k % m, k / m);
            match (i, j) {
                (0, 0) => "1".to_string(),
                (i, 0) => format!("x^{i}"),
                (0, j) => format!("y^{j}"),
                (i, j) => format!("x^{i}y^{j}"),
            }
        })
        .collect();
    FiniteGroup::from_fn(m * n, Some(names), |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        (i + rp[j] * k) % m + m * ((j + l) % n)
    })
}

/// The dicyclic group of order `4n` (`n = 2` gives the quaternion group).
pub fn dicyclic(n: usize) -> FiniteGroup {
    let m = 2 * n;
    FiniteGroup::from_fn(2 * m, None, |a, b| {
        let (i, j) = (a % m, a / m);
        let (k, l) = (b % m, b / m);
        if j == 0 {
            (i + k) % m + m * l
        } else {
            let e = (i + m - k) % m;
            if l == 1 {
                (e + n) % m
            } else {
                e + m
            }
        }
    })
    .expect("dicyclic group")
}

/// Arithmetic in GF(q) for q ∈ {2,4}; GF(4) = {0,1,w,w^2} coded 0..3.
fn gf_add(_q: usize, a: usize, b: usize) -> usize {
    a ^ b
}

fn gf_mul(q: usize, a: usize, b: usize) -> usize {
    if q == 2 {
        return a & b;
    }
    if a == 0 || b == 0 {
        return 0;
    }
    // 1 -> w^0, 2 -> w^1, 3 -> w^2
    let la = a - 1;
    let lb = b - 1;
    (la + lb) % 3 + 1
}

fn matrix_group(q: usize, special: bool) -> FiniteGroup {
    let mut mats: Vec<[usize; 4]> = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let det = gf_add(q, gf_mul(q, a, d), gf_mul(q, b, c));
                    if det != 0 && (!special || det == 1) {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let id = mats.iter().position(|m| *m == [1, 0, 0, 1]).unwrap();
    let idm = mats.remove(id);
    mats.insert(0, idm);
    let index: std::collections::HashMap<[usize; 4], usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let names = mats.iter().map(|m| format!("[{} {};{} {}]", m[0], m[1], m[2], m[3])).collect();
    let n = mats.len();
    FiniteGroup::from_fn(n, Some(names), |x, y| {
        let (m, k) = (mats[x], mats[y]);
        let p = [
            gf_add(q, gf_mul(q, m[0], k[0]), gf_mul(q, m[1], k[2])),
            gf_add(q, gf_mul(q, m[0], k[1]), gf_mul(q, m[1], k[3])),
            gf_add(q, gf_mul(q, m[2], k[0]), gf_mul(q, m[3], k[2])),
            gf_add(q, gf_mul(q, m[2], k[1]), gf_mul(q, m[3], k[3])),
        ];
        index[&p]
    })
    .expect("matrix group")
}

/// Spec strings of the catalog used by the verification suites. Every group
/// here has order at most 100.
pub fn catalog() -> Vec<&'static str> {
    vec![
        "trivial",
        "cyclic:2",
        "cyclic:3",
        "cyclic:4",
        "cyclic:5",
        "cyclic:6",
        "cyclic:7",
        "cyclic:8",
        "cyclic:9",
        "cyclic:10",
        "cyclic:12",
        "klein",
        "elemab:2:3",
        "elemab:3:2",
        "elemab:5:2",
        "cyclic:2*cyclic:4",
        "cyclic:2*cyclic:6",
        "cyclic:6*cyclic:3",
        "sym:3",
        "dihedral:4",
        "dihedral:5",
        "dihedral:6",
        "dihedral:7",
        "dihedral:11",
        "quaternion",
        "dicyclic:3",
        "alt:4",
        "sym:4",
        "sdp:5:4:2",
        "sdp:5:4:4",
        "sdp:7:3:2",
        "sym:3*cyclic:3",
        "sym:3*cyclic:2",
        "sym:3*sym:3",
        "alt:4*cyclic:2",
        "dihedral:4*cyclic:2",
        "alt:5",
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FiniteGroup {
        group_builtin(s, &Caps::default()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(g("cyclic:6").order(), 6);
        assert_eq!(g("dihedral:5").order(), 10);
        assert!(!g("dihedral:5").is_abelian());
        assert_eq!(g("sym:4").order(), 24);
        assert_eq!(g("alt:5").order(), 60);
        assert_eq!(g("sl2:4").order(), 60);
        assert_eq!(g("gl2:2").order(), 6);
        assert_eq!(g("sl2:2").order(), 6);
        assert_eq!(g("elemab:3:2").order(), 9);
        assert_eq!(g("sdp:5:4:2").order(), 20);
        assert_eq!(g("quaternion").order(), 8);
        assert_eq!(g("sym:3*cyclic:3").order(), 18);
    }

    #[test]
    fn errors() {
        let caps = Caps::default();
        assert!(matches!(group_builtin("foo:3", &caps), Err(GroupError::UnknownFamily(_))));
        assert!(matches!(group_builtin("alt:9", &caps), Err(GroupError::ParameterOutOfRange(_))));
        assert!(group_builtin("sdp:5:4:3", &caps).is_ok());
        assert!(group_builtin("sdp:5:3:2", &caps).is_err());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = g("quaternion");
        let inv = (1..8).filter(|&x| q.element_order(x) == 2).count();
        assert_eq!(inv, 1);
    }

    #[test]
    fn catalog_builds_and_is_small() {
        for s in catalog() {
            let h = g(s);
            assert!(h.order() <= 100, "{s}");
        }
    }
}
