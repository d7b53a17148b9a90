//! `g_1`: pairs `(a, b)` with `a` symmetric bilinear on `R^k` and `b`
//! bilinear `C^k × C^m → C^m`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cones::{lie_algebra_basis, ConeAlgebra};
use crate::exactlin::{int, rat, CRow, CVar, Columns, GaussianRational, LinearSystem};

use super::{alg_entry, SiegelDomainSpec};

pub fn g_one_dim(d: &SiegelDomainSpec) -> usize {
    g_one_with(d, &lie_algebra_basis(&d.cone))
}

fn sym(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

pub(super) fn g_one_with(d: &SiegelDomainSpec, alg: &ConeAlgebra) -> usize {
    let (k, m, g) = (d.k, d.m(), alg.dim());
    let mut cols = Columns::new();
    // σ[r][j]: A_{e_r} = Σ_j σ_j E_j
    let sigma: Vec<Vec<usize>> = (0..k).map(|_| (0..g).map(|_| cols.real()).collect()).collect();
    // ψ[t][t'][ω][j]: B_{ω e_t, e_t'} = Σ_j ψ_j E_j, ω ∈ {1, i}
    let psi: Vec<Vec<Vec<Vec<usize>>>> = (0..m)
        .map(|_| (0..m).map(|_| (0..2).map(|_| (0..g).map(|_| cols.real()).collect()).collect()).collect())
        .collect();
    let n_aux = cols.count();
    // a^l_{ij}, i ≤ j
    let mut a: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for l in 0..k {
        for i in 0..k {
            for j in i..k {
                a.insert((l, i, j), cols.real());
            }
        }
    }
    // b^q_{rp} = (b(e_r, e_p))_q
    let b: Vec<Vec<Vec<CVar>>> = (0..m).map(|_| (0..k).map(|_| (0..m).map(|_| cols.complex()).collect()).collect()).collect();
    let mut sys = LinearSystem::new(cols.count(), n_aux);
    let one = GaussianRational::from_ints(1, 0);
    let half = GaussianRational::real(rat(1, 2));
    let h = |l: usize| d.h.component(l);

    // a^l_{(r,j)} − Σ_t σ_t (E_t)_{lj} = 0
    for r in 0..k {
        for l in 0..k {
            for j in 0..k {
                let (i0, j0) = sym(r, j);
                let mut row = CRow::new();
                row.add_real(a[&(l, i0, j0)], &one);
                for t in 0..g {
                    let e = alg_entry(alg, t, l, j);
                    if !e.is_zero() {
                        row.add_real(sigma[r][t], &GaussianRational::real(-e.clone()));
                    }
                }
                sys.push_re(&row);
            }
        }
    }

    if m > 0 {
        // (i): B_r = ½ b(e_r, ·) is associated to A_r, and Im tr B_r = 0.
        for r in 0..k {
            for l in 0..k {
                for e in 0..m {
                    for f in 0..m {
                        let mut row = CRow::new();
                        for j in 0..k {
                            let hj = &h(j)[(e, f)];
                            if !hj.is_zero() {
                                let (i0, j0) = sym(r, j);
                                row.add_real(a[&(l, i0, j0)], hj);
                            }
                        }
                        for q in 0..m {
                            let c1 = &h(l)[(q, f)];
                            if !c1.is_zero() {
                                row.add_conj(b[q][r][e], &-(c1 * &half));
                            }
                            let c2 = &h(l)[(e, q)];
                            if !c2.is_zero() {
                                row.add_var(b[q][r][f], &-(c2 * &half));
                            }
                        }
                        sys.push_complex(&row);
                    }
                }
            }
            let mut tr = CRow::new();
            for p in 0..m {
                tr.add_var(b[p][r][p], &half);
            }
            sys.push_im(&tr);
        }

        // (ii): [x ↦ Im H(w', b(x, w))] ∈ g(Ω) for w = ω e_t, w' = e_t'.
        let omegas = [one.clone(), GaussianRational::i()];
        for t in 0..m {
            for t2 in 0..m {
                for (o, om) in omegas.iter().enumerate() {
                    for l in 0..k {
                        for r in 0..k {
                            let mut row = CRow::new();
                            for q in 0..m {
                                let hv = &h(l)[(t2, q)];
                                if !hv.is_zero() {
                                    row.add_var(b[q][r][t], &(om * hv));
                                }
                            }
                            for j in 0..g {
                                let e = alg_entry(alg, j, l, r);
                                if !e.is_zero() {
                                    row.add_real(psi[t][t2][o][j], &GaussianRational::new(int(0), -e.clone()));
                                }
                            }
                            sys.push_im(&row);
                        }
                    }
                }
            }
        }

        // (iii): H(w, b(H(w',w''), w'')) = H(b(H(w'',w), w'), w''), matched on
        // w̄_e w̄'_a w''_c w''_p with c ≤ p.
        for l in 0..k {
            let mut eqs: BTreeMap<(usize, usize, usize, usize), CRow> = BTreeMap::new();
            for r in 0..k {
                for e in 0..m {
                    for q in 0..m {
                        let hl = &h(l)[(e, q)];
                        if hl.is_zero() {
                            continue;
                        }
                        for a2 in 0..m {
                            for c in 0..m {
                                let hr = &h(r)[(a2, c)];
                                if hr.is_zero() {
                                    continue;
                                }
                                let coef = hl * hr;
                                for p in 0..m {
                                    let (c0, p0) = sym(c, p);
                                    eqs.entry((e, a2, c0, p0)).or_default().add_var(b[q][r][p], &coef);
                                }
                            }
                        }
                    }
                }
                // − conj(b^q_{rp}) (H_r)_{yx} (H_l)_{q p'} over w̄_y w̄'_p w''_x w''_p'
                for q in 0..m {
                    for p2 in 0..m {
                        let hl = &h(l)[(q, p2)];
                        if hl.is_zero() {
                            continue;
                        }
                        for y in 0..m {
                            for x in 0..m {
                                let hr = &h(r)[(y, x)];
                                if hr.is_zero() {
                                    continue;
                                }
                                let coef = -(hr * hl);
                                for p in 0..m {
                                    let (x0, p0) = sym(x, p2);
                                    eqs.entry((y, p, x0, p0)).or_default().add_conj(b[q][r][p], &coef);
                                }
                            }
                        }
                    }
                }
            }
            for row in eqs.values() {
                sys.push_complex(row);
            }
        }
    }
    sys.projected_dim()
}
