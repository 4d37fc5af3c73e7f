#![allow(dead_code)]

use std::process::Command;

pub struct Golden {
    pub args: &'static [&'static str],
    pub stdout: &'static str,
}

/// Byte-exact outputs; every expected string was derived by hand from the
/// frame formulas.
pub const GOLDEN: &[Golden] = &[
    Golden {
        args: &["xh", "-n", "1", "-H", "1"],
        stdout: "1 d/dz\n",
    },
    Golden {
        args: &["xh", "-n", "1", "-H", "z"],
        stdout: "1/2*x1 d/dx1 + 1/2*y1 d/dy1 + z d/dz\n",
    },
    Golden {
        args: &["bracket", "-n", "1", "-H1", "x1", "-H2", "y1"],
        stdout: "1\n",
    },
    Golden {
        args: &["pair", "-n", "1", "-X", "[1,0,y1/2]", "-Y", "[0,-1,x1/2]"],
        stdout: "1\n",
    },
    Golden {
        args: &["decompose", "-n", "1", "-X", "[0,0,1]"],
        stdout: "H = 1\nY = 0\n",
    },
    Golden {
        args: &["decompose", "-n", "1", "-X", "[1,0,0]"],
        stdout: "H = -1/2*y1\nY = 1/2 d/dx1 + 1/4*y1 d/dz\n",
    },
    Golden {
        args: &["act", "-n", "1", "-H", "z", "-F", "[1]", "-G", "[0]"],
        stdout: "F = [-1/2]\nG = [0]\n",
    },
    Golden {
        args: &["realize", "-n", "1", "-X", "[1,0,y1/2]"],
        stdout: "form = 1/2*y1 dx1^dy1 + 1 dy1^dz\ndensity = 1 * Omega^-1\n",
    },
    Golden {
        args: &["reeb", "-n", "1"],
        stdout: "1 d/dz\n",
    },
    Golden {
        args: &["reeb", "-n", "1", "-f", "1+x^2"],
        stdout: "(-2*x1/(x1^4 + 2*x1^2 + 1)) d/dy1 + ((2*x1^2 + 1)/(x1^4 + 2*x1^2 + 1)) d/dz\n",
    },
    Golden {
        args: &[
            "lieder", "-n", "1", "-H", "z", "--weight", "-1/2", "-f", "x",
        ],
        stdout: "-1/2*x1 * Omega^-1/2\n",
    },
    Golden {
        args: &[
            "lieder", "-n", "1", "-H", "x1", "--weight", "-1/2", "-f", "y1",
        ],
        stdout: "1 * Omega^-1/2\n",
    },
    Golden {
        args: &["xh", "-n", "1", "-H", "1", "--format", "json"],
        stdout: "{\"kind\":\"field\",\"name\":\"X\",\"value\":\"1 d/dz\",\"n\":1}\n",
    },
    Golden {
        args: &[
            "--format=json",
            "bracket",
            "-n",
            "2",
            "-H1",
            "x2",
            "-H2",
            "y2",
        ],
        stdout: "{\"kind\":\"hamiltonian\",\"name\":\"H\",\"value\":\"1\",\"n\":2}\n",
    },
];

pub struct ErrorCase {
    pub args: &'static [&'static str],
    pub env: Option<(&'static str, &'static str)>,
    pub code: i32,
    /// Start of the first stderr line.
    pub stderr_prefix: &'static str,
}

const fn err(args: &'static [&'static str], code: i32, stderr_prefix: &'static str) -> ErrorCase {
    ErrorCase {
        args,
        env: None,
        code,
        stderr_prefix,
    }
}

pub const ERRORS: &[ErrorCase] = &[
    err(
        &["xh", "-H", "x^y"],
        2,
        "error: SyntaxError: syntax error at offset 3",
    ),
    err(&["xh", "-H", "w + 1"], 2, "error: UnknownVariable"),
    err(&["xh", "-n", "2", "-H", "x"], 2, "error: UnknownVariable"),
    err(&["xh", "-H", "1/(x-x)"], 2, "error: ZeroDenominator"),
    err(&["decompose", "-X", "[1,2]"], 2, "error: FieldLength"),
    err(
        &["lieder", "-H", "x", "--weight", "abc", "-f", "1"],
        2,
        "error: UsageError",
    ),
    err(&["xh"], 2, "error:"),
    err(&["frobnicate"], 2, "error:"),
    err(
        &["pair", "-X", "[1,0,0]", "-Y", "[0,-1,x/2]"],
        1,
        "error: NotTangent",
    ),
    err(&["realize", "-X", "[0,0,1]"], 1, "error: NotTangent"),
    err(&["reeb", "-f", "0"], 1, "error: NotContact"),
    err(&["xh", "-n", "0", "-H", "1"], 1, "error: InvalidDimension"),
    err(
        &["act", "-H", "x", "-F", "[1,2]", "-G", "[0]"],
        1,
        "error: WrongArity",
    ),
    err(&["check", "--suite", "nope"], 1, "error: UnknownSuite"),
    ErrorCase {
        args: &["check", "--suite", "trace", "--trials", "1"],
        env: Some(("CONTACTKIT_SEED", "zz")),
        code: 2,
        stderr_prefix: "error: UsageError",
    },
];

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn contactkit(args: &[&str], env: Option<(&str, &str)>) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_contactkit"));
    cmd.args(args).env_remove("CONTACTKIT_SEED");
    if let Some((k, v)) = env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Mismatch descriptions for the golden table; empty when all match.
pub fn golden_mismatches() -> Vec<String> {
    GOLDEN
        .iter()
        .filter_map(|g| {
            let run = contactkit(g.args, None);
            (run.code != 0 || run.stdout != g.stdout).then(|| {
                format!(
                    "{:?}: exit {} stdout {:?} (expected {:?})",
                    g.args, run.code, run.stdout, g.stdout
                )
            })
        })
        .collect()
}

pub fn error_mismatches() -> Vec<String> {
    ERRORS
        .iter()
        .filter_map(|e| {
            let run = contactkit(e.args, e.env);
            (run.code != e.code
                || !run.stderr.starts_with(e.stderr_prefix)
                || !run.stdout.is_empty())
            .then(|| {
                format!(
                    "{:?}: exit {} stderr {:?} (expected {} / {:?})",
                    e.args, run.code, run.stderr, e.code, e.stderr_prefix
                )
            })
        })
        .collect()
}

/// A mix of polynomials (some with fractional coefficients) and proper
/// fractions over n = 1, 2, 3.
pub fn random_values(seed: u64, count: usize) -> Vec<contactkit::algebra::RatFn> {
    use contactkit::algebra::{Rat, RatFn};
    use contactkit::verify::{derive_seed, GenConfig, Generator};

    let mut pick = Generator::new(GenConfig::new(seed, 1));
    (0..count)
        .map(|i| {
            let n = 1 + pick.index(3);
            let mut g = Generator::new(GenConfig::new(derive_seed(seed, i as u64), n));
            let num = g.poly();
            match pick.index(3) {
                0 => RatFn::from_poly(num),
                1 => {
                    let k = 2 + pick.index(9) as i64;
                    RatFn::from_poly(num.scale(&Rat::new(1 - 2 * (k % 2), k)))
                }
                _ => RatFn::new(num, g.nonzero_poly()).expect("nonzero denominator"),
            }
        })
        .collect()
}

/// Values whose canonical text does not parse back to an equal value.
pub fn roundtrip_failures(values: &[contactkit::algebra::RatFn]) -> Vec<String> {
    use contactkit::cli::{parse_ratfn, print};

    values
        .iter()
        .filter_map(|v| {
            let text = print::ratfn(v);
            match parse_ratfn(&text, v.n()) {
                Ok(back) if &back == v => None,
                Ok(back) => Some(format!("{text} -> {}", print::ratfn(&back))),
                Err(e) => Some(format!("{text}: {e}")),
            }
        })
        .collect()
}
