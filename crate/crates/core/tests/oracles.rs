//! Engine verdicts and products against hand-written loops that never touch
//! the diagram evaluator.

use wreathforge_core::catalog::{self, Suite};
use wreathforge_core::check::{check_on_model, Verdict};
use wreathforge_core::library::{self, GroupPresentation};
use wreathforge_core::model::Primitive;
use wreathforge_core::{build_product, Field, LinearMap, PrimeField, Rationals};

fn v4_mul(a: usize, b: usize) -> usize {
    a ^ b
}

/// Sign cocycle on the Klein four-group, written out independently of the
/// library: `-1` exactly when both indices are 2 or 3.
fn v4_sign(a: usize, b: usize) -> i64 {
    if a >= 2 && b >= 2 {
        -1
    } else {
        1
    }
}

fn sigma_table<K: Field>(m: &wreathforge_core::HopfDatumModel<K>) -> Vec<Vec<K::Elem>> {
    let s = m.map(Primitive::Sigma);
    let n = m.f().dim;
    (0..n)
        .map(|x| (0..n).map(|y| s.get(0, x * n + y).clone()).collect())
        .collect()
}

/// Checks `s(g, hk) s(h, k) = s(gh, k) s(g, h)` over every triple.
fn cocycle_by_loop<K: Field>(field: &K, s: &[Vec<K::Elem>], mul: impl Fn(usize, usize) -> usize) -> bool {
    let n = s.len();
    let mut triples = 0;
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                triples += 1;
                let left = field.mul(&s[g][mul(h, k)], &s[h][k]);
                let right = field.mul(&s[mul(g, h)][k], &s[g][h]);
                if left != right {
                    return false;
                }
            }
        }
    }
    assert_eq!(triples, n * n * n);
    true
}

fn twisted<K: Field>(field: K) -> wreathforge_core::HopfDatumModel<K> {
    let table: Vec<Vec<K::Elem>> = (0..4)
        .map(|a| (0..4).map(|b| field.from_i64(v4_sign(a, b))).collect())
        .collect();
    library::twisted_group_algebra(field, &GroupPresentation::klein_four(), &table).unwrap()
}

#[test]
fn library_cocycle_matches_independent_table() {
    let q = Rationals;
    let m = library::twisted_v4(q).unwrap();
    assert_eq!(m, twisted(q));
    let squares: Vec<String> = (1..4).map(|x| q.format(&sigma_table(&m)[x][x])).collect();
    assert_eq!(squares, ["1", "-1", "-1"]);
}

#[test]
fn two_cocycle_verdict_matches_loop() {
    for m in [twisted(Rationals)] {
        let s = sigma_table(&m);
        let oracle = cocycle_by_loop(m.field(), &s, v4_mul);
        assert!(oracle);
        let engine = check_on_model(catalog::axiom("hopf.2-cocycle").unwrap(), &m).verdict;
        assert_eq!(engine, Verdict::Pass);

        for (row, col) in [(0, 3), (0, 5), (0, 15)] {
            let bent = library::perturb(&m, "sigma", row, col, &m.field().one()).unwrap();
            let oracle = cocycle_by_loop(bent.field(), &sigma_table(&bent), v4_mul);
            let engine = check_on_model(catalog::axiom("hopf.2-cocycle").unwrap(), &bent).verdict;
            assert_eq!(engine == Verdict::Pass, oracle, "column {col}");
        }
    }
}

#[test]
fn two_cocycle_verdict_matches_loop_over_f7() {
    let m = twisted(PrimeField::new(7).unwrap());
    assert!(cocycle_by_loop(m.field(), &sigma_table(&m), v4_mul));
    assert_eq!(
        check_on_model(catalog::axiom("hopf.2-cocycle").unwrap(), &m).verdict,
        Verdict::Pass
    );
}

/// Column `c` of a map as a dense vector.
fn column<K: Field>(m: &LinearMap<K>, c: usize) -> Vec<K::Elem> {
    (0..m.rows()).map(|r| m.get(r, c).clone()).collect()
}

#[test]
fn twisted_product_is_classical_twisted_algebra() {
    let q = Rationals;
    let m = twisted(q);
    let p = build_product(&m).unwrap();
    // B is one-dimensional, so the basis of FB is the group itself.
    for x in 0..4 {
        for y in 0..4 {
            let mut expected = vec![q.zero(); 4];
            expected[v4_mul(x, y)] = q.from_i64(v4_sign(x, y));
            assert_eq!(column(&p.nabla, x * 4 + y), expected, "{x} * {y}");
        }
    }
}

/// Permutations of three points, composed right to left.
type Perm = [usize; 3];

fn compose(a: Perm, b: Perm) -> Perm {
    [a[b[0]], a[b[1]], a[b[2]]]
}

#[test]
fn smash_s3_product_is_group_algebra_of_s3() {
    let q = Rationals;
    let m = library::smash_product_s3(q).unwrap();
    let p = build_product(&m).unwrap();
    let id: Perm = [0, 1, 2];
    let r: Perm = [1, 2, 0];
    let s: Perm = [0, 2, 1];
    let rot = [id, r, compose(r, r)];
    let refl = [id, s];
    // Basis (f, b) with f in C3 most significant stands for rot[f] * refl[b].
    let element = |i: usize| compose(rot[i / 2], refl[i % 2]);
    let index = |g: Perm| (0..6).find(|&i| element(i) == g).expect("S3 element");
    for i in 0..6 {
        for j in 0..6 {
            let mut expected = vec![q.zero(); 6];
            expected[index(compose(element(i), element(j)))] = q.one();
            assert_eq!(column(&p.nabla, i * 6 + j), expected, "{i} * {j}");
        }
    }
}

/// Sweedler algebra in the basis `x^i g^a`, index `2i + a`.
fn sweedler_mul(u: usize, v: usize) -> Option<(i64, usize)> {
    let (i, a) = (u / 2, u % 2);
    let (j, b) = (v / 2, v % 2);
    if i + j >= 2 {
        return None;
    }
    let sign = if a * j == 1 { -1 } else { 1 };
    Some((sign, 2 * (i + j) + (a + b) % 2))
}

type Vector = Vec<i64>;

fn tensor_mul(u: &Vector, v: &Vector) -> Vector {
    let mut out = vec![0; 16];
    for (p, &cu) in u.iter().enumerate().filter(|(_, c)| **c != 0) {
        for (q, &cv) in v.iter().enumerate().filter(|(_, c)| **c != 0) {
            let (l, r) = (sweedler_mul(p / 4, q / 4), sweedler_mul(p % 4, q % 4));
            if let (Some((sl, l)), Some((sr, r))) = (l, r) {
                out[l * 4 + r] += cu * cv * sl * sr;
            }
        }
    }
    out
}

#[test]
fn radford_product_is_sweedler_bialgebra() {
    let q = Rationals;
    let m = library::radford_h4(q).unwrap();
    let p = build_product(&m).unwrap();
    for u in 0..4 {
        for v in 0..4 {
            let mut expected = vec![q.zero(); 4];
            if let Some((sign, w)) = sweedler_mul(u, v) {
                expected[w] = q.from_i64(sign);
            }
            assert_eq!(column(&p.nabla, u * 4 + v), expected, "{u} * {v}");
        }
    }
    // The coproduct is multiplicative with g grouplike and x skew-primitive.
    let mut g = vec![0; 16];
    g[4 + 1] = 1;
    let mut x = vec![0; 16];
    x[2 * 4] = 1;
    x[4 + 2] = 1;
    let one = {
        let mut v = vec![0; 16];
        v[0] = 1;
        v
    };
    for u in 0..4 {
        let (i, a) = (u / 2, u % 2);
        let mut expected = one.clone();
        if i == 1 {
            expected = tensor_mul(&expected, &x);
        }
        if a == 1 {
            expected = tensor_mul(&expected, &g);
        }
        let expected: Vec<_> = expected.into_iter().map(|c| q.from_i64(c)).collect();
        assert_eq!(column(&p.delta, u), expected, "delta of {u}");
    }
}

#[test]
fn bicrossproduct_product_is_associative_by_loop() {
    let q = Rationals;
    let m = library::bicrossproduct_s3(q).unwrap();
    let p = build_product(&m).unwrap();
    let n = 6;
    let mul = |u: &[num_rational::BigRational], v: &[num_rational::BigRational]| {
        let mut out = vec![q.zero(); n];
        for (a, ua) in u.iter().enumerate() {
            for (b, vb) in v.iter().enumerate() {
                let c = q.mul(ua, vb);
                if q.is_zero(&c) {
                    continue;
                }
                for (r, o) in out.iter_mut().enumerate() {
                    q.mul_add_assign(o, &c, p.nabla.get(r, a * n + b));
                }
            }
        }
        out
    };
    let basis = |i: usize| {
        let mut v = vec![q.zero(); n];
        v[i] = q.one();
        v
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let left = mul(&mul(&basis(a), &basis(b)), &basis(c));
                let right = mul(&basis(a), &mul(&basis(b), &basis(c)));
                assert_eq!(left, right, "({a} {b}) {c}");
            }
        }
    }
    assert_eq!(
        catalog::suite_axioms(Suite::TauBimonadFb).count(),
        wreathforge_core::check_tau_bimonad(&p).axioms.len()
    );
}
