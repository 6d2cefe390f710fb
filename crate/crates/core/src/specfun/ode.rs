//! Dormand–Prince 5(4) stepping for small real systems.

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

pub type State = [f64; 2];

fn axpy(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *y;
    for (c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

pub struct Integrator<F: Fn(f64, &State) -> State> {
    f: F,
    pub rtol: f64,
    pub atol_rel: f64,
    pub max_steps: usize,
}

impl<F: Fn(f64, &State) -> State> Integrator<F> {
    pub fn new(f: F) -> Self {
        Self { f, rtol: 1e-12, atol_rel: 1e-14, max_steps: 2_000_000 }
    }

    /// Integrate from `(x0, y0)` through the ascending `targets`, returning the
    /// state at each target. `h0` is the initial trial step.
    pub fn sweep(&self, x0: f64, y0: State, targets: &[f64], h0: f64) -> Option<Vec<State>> {
        let mut out = Vec::with_capacity(targets.len());
        let mut x = x0;
        let mut y = y0;
        let mut h = h0;
        let mut scale = [y0[0].abs().max(1e-300), y0[1].abs().max(1e-300)];
        let mut k1 = (self.f)(x, &y);
        let mut steps = 0;
        for &xt in targets {
            while x < xt {
                steps += 1;
                if steps > self.max_steps {
                    return None;
                }
                let last = x + h >= xt;
                let hs = if last { xt - x } else { h };
                let (yn, k7, err) = self.step(x, &y, &k1, hs);
                let mut en = 0.0f64;
                for i in 0..2 {
                    let sc = self.atol_rel * scale[i] + self.rtol * y[i].abs().max(yn[i].abs());
                    en = en.max(err[i].abs() / sc);
                }
                if !en.is_finite() {
                    h *= 0.2;
                    continue;
                }
                if en <= 1.0 {
                    x = if last { xt } else { x + hs };
                    y = yn;
                    k1 = k7;
                    scale[0] = scale[0].max(y[0].abs());
                    scale[1] = scale[1].max(y[1].abs());
                    let fac = if en == 0.0 { 5.0 } else { (0.9 * en.powf(-0.2)).clamp(0.2, 5.0) };
                    if !last || fac < 1.0 {
                        h = hs * fac;
                    }
                } else {
                    h = hs * (0.9 * en.powf(-0.2)).clamp(0.1, 0.9);
                }
            }
            out.push(y);
        }
        Some(out)
    }

    fn step(&self, x: f64, y: &State, k1: &State, h: f64) -> (State, State, State) {
        let f = &self.f;
        let k2 = f(x + C2 * h, &axpy(y, h, &[(A21, k1)]));
        let k3 = f(x + C3 * h, &axpy(y, h, &[(A31, k1), (A32, &k2)]));
        let k4 = f(x + C4 * h, &axpy(y, h, &[(A41, k1), (A42, &k2), (A43, &k3)]));
        let k5 = f(x + C5 * h, &axpy(y, h, &[(A51, k1), (A52, &k2), (A53, &k3), (A54, &k4)]));
        let k6 = f(x + h, &axpy(y, h, &[(A61, k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]));
        let yn = axpy(y, h, &[(B1, k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
        let k7 = f(x + h, &yn);
        let mut err = [0.0; 2];
        for i in 0..2 {
            err[i] = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
        }
        (yn, k7, err)
    }
}
