//! Chain-level splitting of a relative cobordism triad: the derived
//! complexes C'', B'', W⁻, W⁺ with their glue maps, and the four
//! quasi-isomorphism certificates recovering D, E, C and C' from them.

use super::complex::{cone, is_quasi_iso, stack_targets, ChainComplex, ChainError, ChainMap};
use crate::exact_linalg::IntMatrix;

/// A commuting triad of complexes
///
/// ```text
///   B ⊔ B' ──> E
///     │        │
///     v        v
///   C ⊔ C' ──> D
/// ```
///
/// stored with all seven maps; both squares must commute exactly.
#[derive(Clone, Debug)]
pub struct RelativeCobordismTriad {
    pub b: ChainComplex,
    pub b_prime: ChainComplex,
    pub c: ChainComplex,
    pub c_prime: ChainComplex,
    pub e: ChainComplex,
    pub d: ChainComplex,
    pub b_to_c: ChainMap,
    pub b_to_e: ChainMap,
    pub bp_to_cp: ChainMap,
    pub bp_to_e: ChainMap,
    pub c_to_d: ChainMap,
    pub cp_to_d: ChainMap,
    pub e_to_d: ChainMap,
}

fn compose(g: &ChainMap, f: &ChainMap) -> ChainMap {
    assert_eq!(g.source(), f.target());
    let src = f.source().clone();
    let lo = src.degree_lo();
    let comps: Vec<IntMatrix> = (lo..=src.degree_hi())
        .map(|r| g.component_at(r).mul(&f.component_at(r)))
        .collect();
    ChainMap::new(src, g.target().clone(), lo, comps).expect("composite of chain maps")
}

fn maps_equal(f: &ChainMap, g: &ChainMap) -> bool {
    if f.source() != g.source() || f.target() != g.target() {
        return false;
    }
    let lo = f.source().degree_lo();
    let hi = f.source().degree_hi();
    (lo..=hi).all(|r| f.component_at(r) == g.component_at(r))
}

impl RelativeCobordismTriad {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        b_to_c: ChainMap,
        b_to_e: ChainMap,
        bp_to_cp: ChainMap,
        bp_to_e: ChainMap,
        c_to_d: ChainMap,
        cp_to_d: ChainMap,
        e_to_d: ChainMap,
    ) -> Result<Self, ChainError> {
        let b = b_to_c.source().clone();
        let b_prime = bp_to_cp.source().clone();
        let c = c_to_d.source().clone();
        let c_prime = cp_to_d.source().clone();
        let e = e_to_d.source().clone();
        let d = e_to_d.target().clone();
        let shape_ok = b_to_c.target() == &c
            && b_to_e.source() == &b
            && b_to_e.target() == &e
            && bp_to_cp.target() == &c_prime
            && bp_to_e.source() == &b_prime
            && bp_to_e.target() == &e
            && c_to_d.target() == &d
            && cp_to_d.target() == &d;
        if !shape_ok {
            return Err(ChainError::TriadCommutation(
                "map endpoints do not assemble into a triad".into(),
            ));
        }
        if !maps_equal(&compose(&c_to_d, &b_to_c), &compose(&e_to_d, &b_to_e)) {
            return Err(ChainError::TriadCommutation(
                "B -> C -> D differs from B -> E -> D".into(),
            ));
        }
        if !maps_equal(&compose(&cp_to_d, &bp_to_cp), &compose(&e_to_d, &bp_to_e)) {
            return Err(ChainError::TriadCommutation(
                "B' -> C' -> D differs from B' -> E -> D".into(),
            ));
        }
        Ok(RelativeCobordismTriad {
            b,
            b_prime,
            c,
            c_prime,
            e,
            d,
            b_to_c,
            b_to_e,
            bp_to_cp,
            bp_to_e,
            c_to_d,
            cp_to_d,
            e_to_d,
        })
    }
}

/// Outcome of the four recovery identities, each certified by acyclicity
/// of an explicit comparison cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitCertificates {
    /// `D ≃ cone(C'' -> C ⊕ C')`
    pub d_recovered: bool,
    /// `E ≃ cone(B'' -> W⁻ ⊕ W⁺)`
    pub e_recovered: bool,
    /// `C ≃ cone(B'' -> W⁻ ⊕ C'')`
    pub c_recovered: bool,
    /// `C' ≃ cone(B'' -> C'' ⊕ W⁺)`
    pub c_prime_recovered: bool,
}

impl SplitCertificates {
    pub fn all(&self) -> bool {
        self.d_recovered && self.e_recovered && self.c_recovered && self.c_prime_recovered
    }
}

/// The derived splitting data of a triad.
#[derive(Clone, Debug)]
pub struct SplitTriad {
    pub c_dprime: ChainComplex,
    pub b_dprime: ChainComplex,
    pub w_minus: ChainComplex,
    pub w_plus: ChainComplex,
    pub c_dprime_to_c: ChainMap,
    pub c_dprime_to_c_prime: ChainMap,
    pub b_dprime_to_w_minus: ChainMap,
    pub b_dprime_to_w_plus: ChainMap,
    pub b_dprime_to_c_dprime: ChainMap,
    pub certificates: SplitCertificates,
}

/// Assemble a component matrix from horizontal blocks given as
/// `(cols, Some(matrix with `rows` rows) | None for a zero block)`.
fn row_of_blocks(rows: usize, blocks: &[(usize, Option<IntMatrix>)]) -> IntMatrix {
    let mats: Vec<IntMatrix> = blocks
        .iter()
        .map(|(cols, m)| match m {
            Some(m) => {
                assert_eq!(m.rows(), rows);
                assert_eq!(m.cols(), *cols);
                m.clone()
            }
            None => IntMatrix::zeros(rows, *cols),
        })
        .collect();
    let refs: Vec<&IntMatrix> = mats.iter().collect();
    IntMatrix::block(&[refs])
}

fn neg_identity(n: usize) -> IntMatrix {
    IntMatrix::identity(n).neg()
}

/// Split a triad: build `C'' = cone(C ⊕ C' -> D)[+1]`,
/// `B'' = cone(C ⊕ E ⊕ C' -> D ⊕ D)[+1]`, `W⁻ = cone(C ⊕ E -> D)[+1]`,
/// `W⁺ = cone(E ⊕ C' -> D)[+1]`, their glue maps, and certify the four
/// recovery identities by quasi-isomorphism of explicit comparison maps.
pub fn split_triad(t: &RelativeCobordismTriad) -> Result<SplitTriad, ChainError> {
    let d = &t.d;
    let (c, cp, e) = (&t.c, &t.c_prime, &t.e);
    let (gc, gcp, ge) = (&t.c_to_d, &t.cp_to_d, &t.e_to_d);

    // span of degrees that can carry anything
    let lo = [c, cp, e, d]
        .iter()
        .map(|x| x.degree_lo())
        .min()
        .unwrap()
        - 2;
    let hi = [c, cp, e, d]
        .iter()
        .map(|x| x.degree_hi())
        .max()
        .unwrap()
        + 2;

    // u : C ⊕ C' -> D, components [g_C | g_C']
    let u = merge_sources(&[gc, gcp]);
    let c_dprime = cone(&u).shift(1);

    // u'' : C ⊕ E ⊕ C' -> D ⊕ D, components [[g_C, g_E, 0],[0, g_E, g_C']]
    let zero_c_to_d = ChainMap::new(c.clone(), d.clone(), 0, Vec::new())?;
    let zero_cp_to_d = ChainMap::new(cp.clone(), d.clone(), 0, Vec::new())?;
    let row1 = merge_sources(&[gc, ge, &zero_cp_to_d]);
    let row2 = merge_sources(&[&zero_c_to_d, ge, gcp]);
    let u_dd = stack_targets(&row1, &row2)?;
    let b_dprime = cone(&u_dd).shift(1);

    let w_minus = cone(&merge_sources(&[gc, ge])).shift(1);
    let w_plus = cone(&merge_sources(&[ge, gcp])).shift(1);

    // glue maps, assembled degreewise from selection blocks
    // C''_r = D_{r+1} ⊕ C_r ⊕ C'_r
    let mk = |target: &ChainComplex,
              source: &ChainComplex,
              f: &dyn Fn(i64) -> IntMatrix|
     -> Result<ChainMap, ChainError> {
        let comps: Vec<IntMatrix> = (lo..=hi).map(f).collect();
        ChainMap::new(source.clone(), target.clone(), lo, comps)
    };

    let c_dprime_to_c = mk(c, &c_dprime, &|r| {
        row_of_blocks(
            c.rank_at(r),
            &[
                (d.rank_at(r + 1), None),
                (c.rank_at(r), Some(IntMatrix::identity(c.rank_at(r)))),
                (cp.rank_at(r), None),
            ],
        )
    })?;
    let c_dprime_to_c_prime = mk(cp, &c_dprime, &|r| {
        row_of_blocks(
            cp.rank_at(r),
            &[
                (d.rank_at(r + 1), None),
                (c.rank_at(r), None),
                (cp.rank_at(r), Some(IntMatrix::identity(cp.rank_at(r)))),
            ],
        )
    })?;

    // B''_r = D_{r+1} ⊕ D_{r+1} ⊕ C_r ⊕ E_r ⊕ C'_r
    let bblocks = |r: i64| {
        [
            d.rank_at(r + 1),
            d.rank_at(r + 1),
            c.rank_at(r),
            e.rank_at(r),
            cp.rank_at(r),
        ]
    };
    // W⁻_r = D_{r+1} ⊕ C_r ⊕ E_r
    let b_dprime_to_w_minus = mk(&w_minus, &b_dprime, &|r| {
        let bb = bblocks(r);
        let rows: [IntMatrix; 3] = [
            row_of_blocks(
                d.rank_at(r + 1),
                &[
                    (bb[0], Some(IntMatrix::identity(bb[0]))),
                    (bb[1], None),
                    (bb[2], None),
                    (bb[3], None),
                    (bb[4], None),
                ],
            ),
            row_of_blocks(
                c.rank_at(r),
                &[
                    (bb[0], None),
                    (bb[1], None),
                    (bb[2], Some(IntMatrix::identity(bb[2]))),
                    (bb[3], None),
                    (bb[4], None),
                ],
            ),
            row_of_blocks(
                e.rank_at(r),
                &[
                    (bb[0], None),
                    (bb[1], None),
                    (bb[2], None),
                    (bb[3], Some(IntMatrix::identity(bb[3]))),
                    (bb[4], None),
                ],
            ),
        ];
        let refs: Vec<Vec<&IntMatrix>> = rows.iter().map(|m| vec![m]).collect();
        IntMatrix::block(&refs)
    })?;
    // W⁺_r = D_{r+1} ⊕ E_r ⊕ C'_r
    let b_dprime_to_w_plus = mk(&w_plus, &b_dprime, &|r| {
        let bb = bblocks(r);
        let rows: [IntMatrix; 3] = [
            row_of_blocks(
                d.rank_at(r + 1),
                &[
                    (bb[0], None),
                    (bb[1], Some(IntMatrix::identity(bb[1]))),
                    (bb[2], None),
                    (bb[3], None),
                    (bb[4], None),
                ],
            ),
            row_of_blocks(
                e.rank_at(r),
                &[
                    (bb[0], None),
                    (bb[1], None),
                    (bb[2], None),
                    (bb[3], Some(IntMatrix::identity(bb[3]))),
                    (bb[4], None),
                ],
            ),
            row_of_blocks(
                cp.rank_at(r),
                &[
                    (bb[0], None),
                    (bb[1], None),
                    (bb[2], None),
                    (bb[3], None),
                    (bb[4], Some(IntMatrix::identity(bb[4]))),
                ],
            ),
        ];
        let refs: Vec<Vec<&IntMatrix>> = rows.iter().map(|m| vec![m]).collect();
        IntMatrix::block(&refs)
    })?;
    // the fold map B'' -> C'': (x1, x2, c, e, c') -> (x1 − x2, c, −c')
    let b_dprime_to_c_dprime = mk(&c_dprime, &b_dprime, &|r| {
        let bb = bblocks(r);
        let rows: [IntMatrix; 3] = [
            row_of_blocks(
                d.rank_at(r + 1),
                &[
                    (bb[0], Some(IntMatrix::identity(bb[0]))),
                    (bb[1], Some(neg_identity(bb[1]))),
                    (bb[2], None),
                    (bb[3], None),
                    (bb[4], None),
                ],
            ),
            row_of_blocks(
                c.rank_at(r),
                &[
                    (bb[0], None),
                    (bb[1], None),
                    (bb[2], Some(IntMatrix::identity(bb[2]))),
                    (bb[3], None),
                    (bb[4], None),
                ],
            ),
            row_of_blocks(
                cp.rank_at(r),
                &[
                    (bb[0], None),
                    (bb[1], None),
                    (bb[2], None),
                    (bb[3], None),
                    (bb[4], Some(neg_identity(bb[4]))),
                ],
            ),
        ];
        let refs: Vec<Vec<&IntMatrix>> = rows.iter().map(|m| vec![m]).collect();
        IntMatrix::block(&refs)
    })?;

    // certificate 1: cone(C'' -> C ⊕ C') -> D via (g_C, g_C', −1, 0, 0)
    let v1 = stack_targets(&c_dprime_to_c, &c_dprime_to_c_prime)?;
    let k1 = cone(&v1);
    let w1 = mk(d, &k1, &|r| {
        row_of_blocks(
            d.rank_at(r),
            &[
                (c.rank_at(r), Some(gc.component_at(r))),
                (cp.rank_at(r), Some(gcp.component_at(r))),
                (d.rank_at(r), Some(neg_identity(d.rank_at(r)))),
                (c.rank_at(r - 1), None),
                (cp.rank_at(r - 1), None),
            ],
        )
    })?;
    let d_recovered = is_quasi_iso(&w1);

    // certificate 2: cone(B'' -> W⁻ ⊕ W⁺) -> E via the difference of the
    // two E components
    let v2 = stack_targets(&b_dprime_to_w_minus, &b_dprime_to_w_plus)?;
    let k2 = cone(&v2);
    let w2 = mk(e, &k2, &|r| {
        let bb = bblocks(r - 1);
        row_of_blocks(
            e.rank_at(r),
            &[
                (d.rank_at(r + 1), None),
                (c.rank_at(r), None),
                (e.rank_at(r), Some(IntMatrix::identity(e.rank_at(r)))),
                (d.rank_at(r + 1), None),
                (e.rank_at(r), Some(neg_identity(e.rank_at(r)))),
                (cp.rank_at(r), None),
                (bb[0], None),
                (bb[1], None),
                (bb[2], None),
                (bb[3], None),
                (bb[4], None),
            ],
        )
    })?;
    let e_recovered = is_quasi_iso(&w2);

    // certificate 3: cone(B'' -> W⁻ ⊕ C'') -> C
    let v3 = stack_targets(&b_dprime_to_w_minus, &b_dprime_to_c_dprime)?;
    let k3 = cone(&v3);
    let w3 = mk(c, &k3, &|r| {
        let bb = bblocks(r - 1);
        row_of_blocks(
            c.rank_at(r),
            &[
                (d.rank_at(r + 1), None),
                (c.rank_at(r), Some(IntMatrix::identity(c.rank_at(r)))),
                (e.rank_at(r), None),
                (d.rank_at(r + 1), None),
                (c.rank_at(r), Some(neg_identity(c.rank_at(r)))),
                (cp.rank_at(r), None),
                (bb[0], None),
                (bb[1], None),
                (bb[2], None),
                (bb[3], None),
                (bb[4], None),
            ],
        )
    })?;
    let c_recovered = is_quasi_iso(&w3);

    // certificate 4: cone(B'' -> C'' ⊕ W⁺) -> C'
    let v4 = stack_targets(&b_dprime_to_c_dprime, &b_dprime_to_w_plus)?;
    let k4 = cone(&v4);
    let w4 = mk(cp, &k4, &|r| {
        let bb = bblocks(r - 1);
        row_of_blocks(
            cp.rank_at(r),
            &[
                (d.rank_at(r + 1), None),
                (c.rank_at(r), None),
                (cp.rank_at(r), Some(IntMatrix::identity(cp.rank_at(r)))),
                (d.rank_at(r + 1), None),
                (e.rank_at(r), None),
                (cp.rank_at(r), Some(IntMatrix::identity(cp.rank_at(r)))),
                (bb[0], None),
                (bb[1], None),
                (bb[2], None),
                (bb[3], None),
                (bb[4], None),
            ],
        )
    })?;
    let c_prime_recovered = is_quasi_iso(&w4);

    Ok(SplitTriad {
        c_dprime,
        b_dprime,
        w_minus,
        w_plus,
        c_dprime_to_c,
        c_dprime_to_c_prime,
        b_dprime_to_w_minus,
        b_dprime_to_w_plus,
        b_dprime_to_c_dprime,
        certificates: SplitCertificates {
            d_recovered,
            e_recovered,
            c_recovered,
            c_prime_recovered,
        },
    })
}

/// `[f_1 | f_2 | ...] : A_1 ⊕ A_2 ⊕ ... -> D` for maps into one target.
fn merge_sources(maps: &[&ChainMap]) -> ChainMap {
    assert!(!maps.is_empty());
    let target = maps[0].target().clone();
    for f in maps {
        assert_eq!(f.target(), &target);
    }
    let mut source = maps[0].source().clone();
    for f in &maps[1..] {
        source = source.direct_sum(f.source());
    }
    if source.is_zero_complex() {
        return ChainMap::new(source, target, 0, Vec::new()).unwrap();
    }
    let lo = source.degree_lo();
    let comps: Vec<IntMatrix> = (lo..=source.degree_hi())
        .map(|r| {
            let blocks: Vec<(usize, Option<IntMatrix>)> = maps
                .iter()
                .map(|f| (f.source().rank_at(r), Some(f.component_at(r))))
                .collect();
            row_of_blocks(target.rank_at(r), &blocks)
        })
        .collect();
    ChainMap::new(source, target, lo, comps).expect("merged chain map")
}
