//! The single table of default verification bounds.
//!
//! Every batch verifier and the CLI `verify-all` command read their limits
//! from here, so a verification run can be cited by one named configuration.
//!
//! | check                                   | full            | quick  |
//! |-----------------------------------------|-----------------|--------|
//! | theorem 1 sweep: q_max                  | 31              | 11     |
//! | theorem 2 sweep: p, q bound             | 31              | 13     |
//! | theorem 3 sweep: q_max                  | 11              | 7      |
//! | theorem 4 sweep: q_max                  | 13              | 7      |
//! | power equations: x_max / y_max / z_max  | 15 / 10^5 / 16  | 15 / 10^4 / 16 |
//! | diophantine box: x, y / z               | 300 / 8         | 60 / 8 |
//! | loeschian identity grid                 | 30              | 12     |
//! | loeschian closure & solvability sweep   | 10^5            | 2*10^4 |
//! | loeschian prime classification sweep    | 10^5            | 2*10^4 |
//! | pseudo-fibonacci identity range / depth | n <= 60, depth 3| same   |
//! | pseudo-fibonacci root orders            | k = 2..9        | same   |
//! | pseudo-fibonacci closed form            | k <= 5, n <= 40 | same   |

/// Bound set for one verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub theorem1_q_max: u64,
    pub theorem2_bound: u64,
    pub theorem3_q_max: u64,
    pub theorem4_q_max: u64,
    pub power_eq_x_max: u64,
    pub power_eq_y_max: u64,
    pub power_eq_z_max: u64,
    pub dioph_xy_max: u64,
    pub dioph_z_max: u64,
    pub loeschian_grid_max: u64,
    pub loeschian_sweep_max: u64,
    pub pseudofib_identity_n_max: usize,
    pub pseudofib_sum_depth: usize,
    pub pseudofib_root_k_max: usize,
    pub pseudofib_closed_form_k_max: usize,
    pub pseudofib_closed_form_n_max: usize,
}

/// Full bounds: the configuration the acceptance checks run at.
pub const FULL: Bounds = Bounds {
    theorem1_q_max: 31,
    theorem2_bound: 31,
    theorem3_q_max: 11,
    theorem4_q_max: 13,
    power_eq_x_max: 15,
    power_eq_y_max: 100_000,
    power_eq_z_max: 16,
    dioph_xy_max: 300,
    dioph_z_max: 8,
    loeschian_grid_max: 30,
    loeschian_sweep_max: 100_000,
    pseudofib_identity_n_max: 60,
    pseudofib_sum_depth: 3,
    pseudofib_root_k_max: 9,
    pseudofib_closed_form_k_max: 5,
    pseudofib_closed_form_n_max: 40,
};

/// Reduced bounds for `verify-all --quick`; the whole suite stays around a
/// second while still exercising every code path.
pub const QUICK: Bounds = Bounds {
    theorem1_q_max: 11,
    theorem2_bound: 13,
    theorem3_q_max: 7,
    theorem4_q_max: 7,
    power_eq_x_max: 15,
    power_eq_y_max: 10_000,
    power_eq_z_max: 16,
    dioph_xy_max: 60,
    dioph_z_max: 8,
    loeschian_grid_max: 12,
    loeschian_sweep_max: 20_000,
    pseudofib_identity_n_max: 60,
    pseudofib_sum_depth: 3,
    pseudofib_root_k_max: 9,
    pseudofib_closed_form_k_max: 5,
    pseudofib_closed_form_n_max: 40,
};
