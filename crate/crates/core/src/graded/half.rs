//! `g_{1/2}`: pairs `(Φ, c)` with `Φ: C^k → C^m` linear and `c` a symmetric
//! bilinear map `C^m × C^m → C^m`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::cones::{lie_algebra_basis, ConeAlgebra};
use crate::exactlin::{int, CRow, CVar, Columns, GaussianRational, LinearSystem};

use super::{alg_entry, SiegelDomainSpec};

pub fn g_half_dim(d: &SiegelDomainSpec) -> usize {
    g_half_with(d, &lie_algebra_basis(&d.cone))
}

/// Real dimension of the space of `Φ: C^k → C^m` with `Φ_w ∈ g(Ω)` for all `w`.
pub fn phi_space_dim(d: &SiegelDomainSpec) -> usize {
    let alg = lie_algebra_basis(&d.cone);
    let (k, m, g) = (d.k, d.m(), alg.dim());
    if m == 0 {
        return 0;
    }
    let mut cols = Columns::new();
    let tau = tau_columns(&mut cols, m, g);
    let n_aux = cols.count();
    let phi: Vec<Vec<CVar>> = (0..m).map(|_| (0..k).map(|_| cols.complex()).collect()).collect();
    let mut sys = LinearSystem::new(cols.count(), n_aux);
    push_phi_constraints(&mut sys, d, &alg, &tau, &phi);
    sys.projected_dim()
}

/// τ[t][ω][j]
fn tau_columns(cols: &mut Columns, m: usize, g: usize) -> Vec<Vec<Vec<usize>>> {
    (0..m).map(|_| (0..2).map(|_| (0..g).map(|_| cols.real()).collect()).collect()).collect()
}

/// `Im H_l(ω e_t, Φ e_r) − Σ_j τ_j (E_j)_{lr} = 0`, with `conj(ω) ∈ {1, −i}`.
fn push_phi_constraints(sys: &mut LinearSystem, d: &SiegelDomainSpec, alg: &ConeAlgebra, tau: &[Vec<Vec<usize>>], phi: &[Vec<CVar>]) {
    let (k, m, g) = (d.k, d.m(), alg.dim());
    let h = |l: usize| d.h.component(l);
    let conj_omega = [GaussianRational::from_ints(1, 0), GaussianRational::from_ints(0, -1)];
    for t in 0..m {
        for (o, co) in conj_omega.iter().enumerate() {
            for l in 0..k {
                for r in 0..k {
                    let mut row = CRow::new();
                    for q in 0..m {
                        row.add_var(phi[q][r], &(co * &h(l)[(t, q)]));
                    }
                    for j in 0..g {
                        let e = alg_entry(alg, j, l, r);
                        if !e.is_zero() {
                            row.add_real(tau[t][o][j], &GaussianRational::new(int(0), -e.clone()));
                        }
                    }
                    sys.push_im(&row);
                }
            }
        }
    }
}

/// `Φ_w ∈ g(Ω)` is imposed for `w ∈ {e_t, i·e_t}` through auxiliary
/// coordinates `τ`, and `H(w, c(w',w')) = 2i H(Φ(H(w',w)), w')` by matching
/// the coefficients of `w̄_b w'_a w'_p`, `a ≤ p`.
pub(super) fn g_half_with(d: &SiegelDomainSpec, alg: &ConeAlgebra) -> usize {
    let (k, m, g) = (d.k, d.m(), alg.dim());
    if m == 0 {
        return 0;
    }
    let mut cols = Columns::new();
    let tau = tau_columns(&mut cols, m, g);
    let n_aux = cols.count();
    // φ_{qr} = (Φ e_r)_q
    let phi: Vec<Vec<CVar>> = (0..m).map(|_| (0..k).map(|_| cols.complex()).collect()).collect();
    // c^q_{ap}, a ≤ p
    let mut c: BTreeMap<(usize, usize, usize), CVar> = BTreeMap::new();
    for q in 0..m {
        for a in 0..m {
            for p in a..m {
                c.insert((q, a, p), cols.complex());
            }
        }
    }
    let mut sys = LinearSystem::new(cols.count(), n_aux);
    let h = |l: usize| d.h.component(l);

    push_phi_constraints(&mut sys, d, alg, &tau, &phi);

    let two = GaussianRational::from_ints(2, 0);
    let two_i = GaussianRational::from_ints(0, 2);
    for l in 0..k {
        let mut eqs: BTreeMap<(usize, usize, usize), CRow> = BTreeMap::new();
        // LHS: Σ (H_l)_{bq} mult(a,p) c^q_{ap}
        for b in 0..m {
            for (&(q, a, p), &var) in &c {
                let hb = &h(l)[(b, q)];
                if hb.is_zero() {
                    continue;
                }
                let coef = if a < p { hb * &two } else { hb.clone() };
                eqs.entry((b, a, p)).or_default().add_var(var, &coef);
            }
        }
        // RHS: 2i Σ conj(φ_{qr}) (H_r)_{ba} (H_l)_{qp} over w̄_b w'_a w'_p
        for q in 0..m {
            for p in 0..m {
                let hl = &h(l)[(q, p)];
                if hl.is_zero() {
                    continue;
                }
                for r in 0..k {
                    for b in 0..m {
                        for a in 0..m {
                            let hr = &h(r)[(b, a)];
                            if hr.is_zero() {
                                continue;
                            }
                            let key = (b, a.min(p), a.max(p));
                            let coef = -(&(&two_i * hr) * hl);
                            eqs.entry(key).or_default().add_conj(phi[q][r], &coef);
                        }
                    }
                }
            }
        }
        for row in eqs.values() {
            sys.push_complex(row);
        }
    }
    sys.projected_dim()
}
