//! Instance spec strings used on the command line.
//!
//! ```text
//! euclidean:<file>        point-set CSV
//! matrix:<file>:<lambda>  explicit matrix CSV with declared lambda
//! g1:<n>                  all-zero instance
//! g2:<n>:<seed>           hidden-star instance
//! star:<n>                heavy star (vertex 0 at weight n/2 + 1)
//! pow:<inner>:<p>         weights of <inner> raised to p
//! line:<n>                points 0..n on a line
//! uniform:<n>:<dim>:<seed> uniform points in the unit cube
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{io, MetricInstance};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSpec {
    Euclidean(PathBuf),
    Matrix(PathBuf, f64),
    G1(usize),
    G2(usize, u64),
    Star(usize),
    Pow(Box<InstanceSpec>, f64),
    Line(usize),
    Uniform { n: usize, dim: usize, seed: u64 },
}

impl InstanceSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let (kind, rest) = s.split_once(':').ok_or_else(|| bad(s, "expected <kind>:<args>"))?;
        let spec = match kind {
            "euclidean" if !rest.is_empty() => Self::Euclidean(rest.into()),
            "matrix" => {
                let (path, lambda) = rest.rsplit_once(':').ok_or_else(|| bad(s, "matrix:<file>:<lambda>"))?;
                Self::Matrix(path.into(), num(s, lambda)?)
            }
            "g1" => Self::G1(num(s, rest)?),
            "g2" => {
                let (n, seed) = rest.split_once(':').ok_or_else(|| bad(s, "g2:<n>:<seed>"))?;
                Self::G2(num(s, n)?, num(s, seed)?)
            }
            "star" => Self::Star(num(s, rest)?),
            "pow" => {
                let (inner, p) = rest.rsplit_once(':').ok_or_else(|| bad(s, "pow:<inner>:<p>"))?;
                Self::Pow(Box::new(Self::parse(inner)?), num(s, p)?)
            }
            "line" => Self::Line(num(s, rest)?),
            "uniform" => {
                let parts: Vec<&str> = rest.split(':').collect();
                let [n, dim, seed] = parts[..] else {
                    return Err(bad(s, "uniform:<n>:<dim>:<seed>"));
                };
                Self::Uniform {
                    n: num(s, n)?,
                    dim: num(s, dim)?,
                    seed: num(s, seed)?,
                }
            }
            _ => return Err(bad(s, "unknown instance kind")),
        };
        Ok(spec)
    }

    pub fn load(&self) -> Result<MetricInstance> {
        match self {
            Self::Euclidean(path) => io::read_points_file(path),
            Self::Matrix(path, lambda) => io::read_matrix_file(path, *lambda),
            Self::G1(n) => {
                if *n < 2 {
                    return Err(Error::InvalidArgument("g1 needs n >= 2".into()));
                }
                Ok(MetricInstance::zero(*n))
            }
            Self::G2(n, seed) => Ok(MetricInstance::make_hardness_pair(*n, *seed)?.1),
            Self::Star(n) => MetricInstance::make_appendix_star(*n),
            Self::Pow(inner, p) => inner.load()?.power_wrap(*p),
            Self::Line(n) => Ok(MetricInstance::line(*n)),
            Self::Uniform { n, dim, seed } => MetricInstance::uniform_points(*n, *dim, *seed),
        }
    }
}

impl FromStr for InstanceSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Euclidean(p) => write!(f, "euclidean:{}", p.display()),
            Self::Matrix(p, l) => write!(f, "matrix:{}:{l}", p.display()),
            Self::G1(n) => write!(f, "g1:{n}"),
            Self::G2(n, s) => write!(f, "g2:{n}:{s}"),
            Self::Star(n) => write!(f, "star:{n}"),
            Self::Pow(inner, p) => write!(f, "pow:{inner}:{p}"),
            Self::Line(n) => write!(f, "line:{n}"),
            Self::Uniform { n, dim, seed } => write!(f, "uniform:{n}:{dim}:{seed}"),
        }
    }
}

fn bad(s: &str, why: &str) -> Error {
    Error::Parse(format!("instance spec `{s}`: {why}"))
}

fn num<T: FromStr>(s: &str, field: &str) -> Result<T> {
    field.parse().map_err(|_| bad(s, &format!("cannot parse `{field}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_kind() {
        assert_eq!(InstanceSpec::parse("g1:10").unwrap(), InstanceSpec::G1(10));
        assert_eq!(InstanceSpec::parse("g2:100:7").unwrap(), InstanceSpec::G2(100, 7));
        assert_eq!(InstanceSpec::parse("star:8").unwrap(), InstanceSpec::Star(8));
        assert_eq!(
            InstanceSpec::parse("matrix:data/m.csv:0.5").unwrap(),
            InstanceSpec::Matrix("data/m.csv".into(), 0.5)
        );
        assert_eq!(
            InstanceSpec::parse("pow:euclidean:pts.csv:2").unwrap(),
            InstanceSpec::Pow(Box::new(InstanceSpec::Euclidean("pts.csv".into())), 2.0)
        );
        assert_eq!(
            InstanceSpec::parse("pow:pow:line:4:2:0.5").unwrap(),
            InstanceSpec::Pow(Box::new(InstanceSpec::Pow(Box::new(InstanceSpec::Line(4)), 2.0)), 0.5)
        );
        assert_eq!(
            InstanceSpec::parse("uniform:16:2:3").unwrap(),
            InstanceSpec::Uniform { n: 16, dim: 2, seed: 3 }
        );
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "g1", "g1:x", "g2:5", "nope:3", "uniform:1:2", "euclidean:"] {
            assert!(InstanceSpec::parse(s).is_err(), "{s}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["g1:10", "g2:5:9", "star:12", "pow:line:6:2", "uniform:8:3:1"] {
            let spec = InstanceSpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn loads_generators() {
        let pow = InstanceSpec::parse("pow:line:3:2").unwrap().load().unwrap();
        assert_eq!(pow.lambda(), 0.25);
        assert!(InstanceSpec::parse("g1:1").unwrap().load().is_err());
    }
}
