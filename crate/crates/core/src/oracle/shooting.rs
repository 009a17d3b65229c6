//! Shooting eigensolver for `psi'' + beta e^{-x} / (1 - e^{-x}) psi = s^2 psi`
//! on `x in (0, inf)` with `psi(0) = 0` and decay at infinity.
//!
//! The regular solution is integrated outward from `x_min` and the decaying
//! solution inward from `x_max` (started on its asymptotic log-derivative
//! `-s`); the two are matched at `x_match` through their normalized
//! Wronskian, which is continuous in `s` and vanishes exactly at the
//! eigenvalues. Roots are bracketed by a logarithmic scan in `s` and
//! refined by bisection. Nodes of the glued eigenfunction label the level.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    pub x_max: f64,
    pub step: f64,
    /// `(epsilon_lo, epsilon_hi)`; defaults to `(-(beta/2)^2, -1e-12)`.
    pub energy_bracket: Option<(f64, f64)>,
    /// Return only the level with this many interior nodes.
    pub node_target: Option<u32>,
    /// Relative bisection tolerance on `s`.
    pub tol: f64,
    pub x_match: f64,
    pub x_min: f64,
    pub scan_points: usize,
    /// Number of times `x_max` may be doubled.
    pub max_doublings: u32,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        ShootingConfig {
            x_max: 40.0,
            step: 1e-3,
            energy_bracket: None,
            node_target: None,
            tol: 1e-10,
            x_match: 5.0,
            x_min: 1e-8,
            scan_points: 400,
            max_doublings: 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ShotLevel {
    /// `nodes + 1`.
    pub n: u32,
    pub epsilon: f64,
    pub nodes: u32,
}

/// Result of one shot at a trial `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Shot {
    pub wronskian: f64,
    pub nodes: u32,
}

const RESCALE: f64 = 1e150;

/// One integration leg with the potential tabulated at nodes and midpoints.
/// Steps shrink like `step * x` below `x = 1` to follow the `1/x` singularity.
struct Leg {
    xs: Vec<f64>,
    /// `beta / (e^x - 1)` at `x_k`, midpoint, interleaved: length `2 * xs.len() - 1`.
    potential: Vec<f64>,
}

impl Leg {
    fn new(beta: f64, from: f64, to: f64, step: f64) -> Self {
        let dir = (to - from).signum();
        let mut xs = vec![from];
        let mut x = from;
        loop {
            let h = step * x.min(1.0);
            if (to - x) * dir <= 1.5 * h {
                // split the remainder so no step is tiny
                if (to - x) * dir > h {
                    x += 0.5 * (to - x);
                    xs.push(x);
                }
                xs.push(to);
                break;
            }
            x += dir * h;
            xs.push(x);
        }
        let v = |x: f64| beta / x.exp_m1();
        let mut potential = Vec::with_capacity(2 * xs.len() - 1);
        for w in xs.windows(2) {
            potential.push(v(w[0]));
            potential.push(v(0.5 * (w[0] + w[1])));
        }
        potential.push(v(to));
        Leg { xs, potential }
    }

    /// RK4 for `psi'' = (s^2 - V) psi`; returns the end state and sign changes of `psi`.
    fn run(&self, s2: f64, mut psi: f64, mut dpsi: f64) -> (f64, f64, u32) {
        let mut nodes = 0;
        for k in 0..self.xs.len() - 1 {
            let h = self.xs[k + 1] - self.xs[k];
            let (v0, vm, v1) = (
                self.potential[2 * k],
                self.potential[2 * k + 1],
                self.potential[2 * k + 2],
            );
            let k1p = dpsi;
            let k1d = (s2 - v0) * psi;
            let k2p = dpsi + 0.5 * h * k1d;
            let k2d = (s2 - vm) * (psi + 0.5 * h * k1p);
            let k3p = dpsi + 0.5 * h * k2d;
            let k3d = (s2 - vm) * (psi + 0.5 * h * k2p);
            let k4p = dpsi + h * k3d;
            let k4d = (s2 - v1) * (psi + h * k3p);
            let next = psi + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
            dpsi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
            if next * psi < 0.0 {
                nodes += 1;
            }
            psi = next;
            if psi.abs() + dpsi.abs() > RESCALE {
                psi /= RESCALE;
                dpsi /= RESCALE;
            }
        }
        (psi, dpsi, nodes)
    }
}

/// Matching machinery for one `beta` and a fixed set of legs.
pub struct Shooter {
    beta: f64,
    x_min: f64,
    outward: Leg,
    inward: Leg,
    x_max: f64,
}

impl Shooter {
    pub fn new(beta: f64, config: &ShootingConfig, x_max: f64) -> Result<Self> {
        if !(config.x_min > 0.0 && config.x_min < config.x_match && config.x_match < x_max) {
            return Err(Error::Domain(format!(
                "need 0 < x_min < x_match < x_max (got {}, {}, {x_max})",
                config.x_min, config.x_match
            )));
        }
        if !(config.step > 0.0) {
            return Err(Error::Domain(format!(
                "step must be positive, got {}",
                config.step
            )));
        }
        Ok(Shooter {
            beta,
            x_min: config.x_min,
            outward: Leg::new(beta, config.x_min, config.x_match, config.step),
            inward: Leg::new(beta, x_max, config.x_match, config.step),
            x_max,
        })
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    /// Normalized Wronskian of the outward and inward solutions at the
    /// matching point, and the node count of the two legs.
    pub fn shoot(&self, s: f64) -> Shot {
        let s2 = s * s;
        // regular solution x - beta x^2 / 2 + ...
        let x0 = self.x_min;
        let (po, dpo, no) =
            self.outward
                .run(s2, x0 - 0.5 * self.beta * x0 * x0, 1.0 - self.beta * x0);
        let (pi, dpi, ni) = self.inward.run(s2, 1.0, -s);
        let w = (dpo * pi - po * dpi) / (po.hypot(dpo) * pi.hypot(dpi));
        Shot {
            wronskian: w,
            nodes: no + ni,
        }
    }
}

/// All bound levels inside the energy bracket, deepest first.
pub fn shoot_eigenvalues(beta: f64, config: &ShootingConfig) -> Result<Vec<ShotLevel>> {
    if !(beta > 0.0) {
        return Err(Error::Domain(format!("beta must be positive, got {beta}")));
    }
    // Hulthen <= Coulomb beta/x, whose ground level is -(beta/2)^2.
    let (e_lo, e_hi) = config
        .energy_bracket
        .unwrap_or((-(0.5 * beta).powi(2) * (1.0 + 1e-6) - 1e-9, -1e-12));
    if !(e_lo < e_hi && e_hi < 0.0) {
        return Err(Error::Domain(format!(
            "energy bracket must satisfy lo < hi < 0, got ({e_lo}, {e_hi})"
        )));
    }
    if config.scan_points < 2 {
        return Err(Error::Domain("scan needs at least 2 points".into()));
    }
    let (s_lo, s_hi) = ((-e_hi).sqrt(), (-e_lo).sqrt());

    // Extend the cutoff until the neglected potential is small against s^2.
    let mut x_max = config.x_max;
    for _ in 0..config.max_doublings {
        if beta / x_max.exp_m1() <= 1e-12 * s_lo * s_lo {
            break;
        }
        x_max *= 2.0;
    }
    let shooter = Shooter::new(beta, config, x_max)?;

    let ratio = (s_hi / s_lo).ln() / (config.scan_points - 1) as f64;
    let scan: Vec<(f64, f64)> = (0..config.scan_points)
        .map(|i| {
            let s = s_lo * (ratio * i as f64).exp();
            (s, shooter.shoot(s).wronskian)
        })
        .collect();

    let mut levels = Vec::new();
    for w in scan.windows(2) {
        let ((a, fa), (b, fb)) = (w[0], w[1]);
        if fa == 0.0 || fa.signum() != fb.signum() {
            let (lo, hi) = bisect(&shooter, a, fa, b, config.tol)?;
            let s = 0.5 * (lo + hi);
            // Below the root the outward solution picks up a spurious sign
            // change where it starts to diverge; the more bound end does not.
            let nodes = shooter.shoot(hi).nodes;
            levels.push(ShotLevel {
                n: nodes + 1,
                epsilon: -s * s,
                nodes,
            });
        }
    }
    levels.sort_by(|p, q| p.epsilon.total_cmp(&q.epsilon));

    if let Some(target) = config.node_target {
        return match levels.iter().find(|l| l.nodes == target) {
            Some(l) => Ok(vec![*l]),
            None => Err(Error::Bracket(format!(
                "no level with {target} nodes in epsilon bracket ({e_lo}, {e_hi}); \
                 sign changes found at nodes {:?}",
                levels
                    .iter()
                    .map(|l| (l.nodes, l.epsilon))
                    .collect::<Vec<_>>()
            ))),
        };
    }
    Ok(levels)
}

/// Final bracket `(lo, hi)` around the sign change.
fn bisect(shooter: &Shooter, mut a: f64, mut fa: f64, mut b: f64, tol: f64) -> Result<(f64, f64)> {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if (b - a) <= tol * m {
            return Ok((a, b));
        }
        let fm = shooter.shoot(m).wronskian;
        if fm == 0.0 {
            return Ok((m, m));
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Err(Error::NumericalFailure {
        what: format!("bisection on s in [{a}, {b}] did not converge"),
        estimate: (b - a) / a,
    })
}
