//! JSON specifications for building group actions.
//!
//! A spec is either a named constructor with parameters or an explicit
//! generator list. Named constructors nest, so products and wreath products
//! of named groups need no generator arithmetic from the caller.

use crate::action::GroupAction;
use crate::builders;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::product;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Constructor {
    Symmetric,
    Alternating,
    Cyclic,
    Dihedral,
    Trivial,
    KSubsets,
    LeftRegular,
    ExternalProduct,
    InternalProduct,
    Wreath,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Named {
        constructor: Constructor,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        inner: Option<Box<GroupSpec>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        outer: Option<Box<GroupSpec>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        factors: Option<Vec<GroupSpec>>,
    },
    /// Generators as cycle strings on 1-based points, e.g. `"(1 2)(3 4)"`.
    Explicit { degree: usize, generators: Vec<String> },
}

impl GroupSpec {
    pub fn from_json(text: &str) -> Result<GroupSpec> {
        serde_json::from_str(text)
            .map_err(|e| Error::Spec(format!("unrecognized group spec: {e}")))
    }

    pub fn from_path(path: &std::path::Path) -> Result<GroupSpec> {
        GroupSpec::from_json(&std::fs::read_to_string(path)?)
    }

    /// Short human-readable name, e.g. `S3 wr S2` or `A5 on 2-subsets`.
    pub fn descriptor(&self) -> String {
        match self {
            GroupSpec::Explicit { degree, generators } => {
                format!("<{}>@{}", generators.join(","), degree)
            }
            GroupSpec::Named {
                constructor,
                n,
                k,
                inner,
                outer,
                factors,
            } => {
                let n_str = |n: &Option<usize>| n.map_or("?".into(), |v| v.to_string());
                let sub = |s: &Option<Box<GroupSpec>>| {
                    s.as_ref().map_or("?".into(), |b| b.descriptor())
                };
                match constructor {
                    Constructor::Symmetric => format!("S{}", n_str(n)),
                    Constructor::Alternating => format!("A{}", n_str(n)),
                    Constructor::Cyclic => format!("C{}", n_str(n)),
                    Constructor::Dihedral => format!("D{}", n_str(n)),
                    Constructor::Trivial => format!("triv({})", n_str(n)),
                    Constructor::KSubsets => {
                        format!("{} on {}-subsets", sub(inner), n_str(k))
                    }
                    Constructor::LeftRegular => format!("reg({})", sub(inner)),
                    Constructor::ExternalProduct => match factors {
                        Some(f) => f
                            .iter()
                            .map(|s| s.descriptor())
                            .collect::<Vec<_>>()
                            .join(" x "),
                        None => "x?".into(),
                    },
                    Constructor::InternalProduct => match factors {
                        Some(f) => format!(
                            "int({})",
                            f.iter().map(|s| s.descriptor()).collect::<Vec<_>>().join(", ")
                        ),
                        None => "int(?)".into(),
                    },
                    Constructor::Wreath => format!("{} wr {}", sub(inner), sub(outer)),
                }
            }
        }
    }

    pub fn build(&self, element_cap: usize) -> Result<GroupAction> {
        match self {
            GroupSpec::Explicit { degree, generators } => {
                let gens = generators
                    .iter()
                    .map(|text| Permutation::parse_cycles(text, *degree))
                    .collect::<Result<Vec<_>>>()?;
                GroupAction::from_generators(*degree, gens, element_cap)
            }
            GroupSpec::Named {
                constructor,
                n,
                k,
                inner,
                outer,
                factors,
            } => {
                let need_n = || {
                    n.ok_or_else(|| {
                        Error::Spec(format!("{constructor:?} constructor needs \"n\""))
                    })
                };
                let build_sub = |slot: &Option<Box<GroupSpec>>, name: &str| {
                    slot.as_ref()
                        .ok_or_else(|| {
                            Error::Spec(format!(
                                "{constructor:?} constructor needs \"{name}\""
                            ))
                        })
                        .and_then(|s| s.build(element_cap))
                };
                match constructor {
                    Constructor::Symmetric => builders::symmetric_natural(need_n()?, element_cap),
                    Constructor::Alternating => {
                        builders::alternating_natural(need_n()?, element_cap)
                    }
                    Constructor::Cyclic => builders::cyclic_regular(need_n()?),
                    Constructor::Dihedral => builders::dihedral_natural(need_n()?),
                    Constructor::Trivial => Ok(builders::trivial(need_n()?)),
                    Constructor::KSubsets => {
                        let k = k.ok_or_else(|| {
                            Error::Spec("k_subsets constructor needs \"k\"".into())
                        })?;
                        builders::on_k_subsets(&build_sub(inner, "inner")?, k)
                    }
                    Constructor::LeftRegular => {
                        builders::left_regular(&build_sub(inner, "inner")?, element_cap)
                    }
                    Constructor::ExternalProduct | Constructor::InternalProduct => {
                        let specs = factors.as_ref().filter(|f| !f.is_empty()).ok_or_else(
                            || {
                                Error::Spec(format!(
                                    "{constructor:?} constructor needs nonempty \"factors\""
                                ))
                            },
                        )?;
                        let built = specs
                            .iter()
                            .map(|s| s.build(element_cap))
                            .collect::<Result<Vec<_>>>()?;
                        let refs: Vec<&GroupAction> = built.iter().collect();
                        if *constructor == Constructor::ExternalProduct {
                            product::external_product_many(&refs, element_cap)
                        } else {
                            product::internal_product(&refs, element_cap)
                        }
                    }
                    Constructor::Wreath => product::wreath_product(
                        &build_sub(inner, "inner")?,
                        &build_sub(outer, "outer")?,
                        element_cap,
                    ),
                }
            }
        }
    }

    pub fn build_with_descriptor(&self, element_cap: usize) -> Result<(GroupAction, String)> {
        Ok((self.build(element_cap)?, self.descriptor()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::DEFAULT_ELEMENT_CAP;

    fn build(text: &str) -> (GroupAction, String) {
        GroupSpec::from_json(text)
            .unwrap()
            .build_with_descriptor(DEFAULT_ELEMENT_CAP)
            .unwrap()
    }

    #[test]
    fn named_basics() {
        let (g, d) = build(r#"{"constructor": "symmetric", "n": 4}"#);
        assert_eq!((g.order(), g.degree(), d.as_str()), (24, 4, "S4"));
        let (g, d) = build(r#"{"constructor": "alternating", "n": 5}"#);
        assert_eq!((g.order(), d.as_str()), (60, "A5"));
        let (g, d) = build(r#"{"constructor": "cyclic", "n": 6}"#);
        assert_eq!((g.order(), d.as_str()), (6, "C6"));
        let (g, d) = build(r#"{"constructor": "dihedral", "n": 5}"#);
        assert_eq!((g.order(), d.as_str()), (10, "D5"));
        let (g, d) = build(r#"{"constructor": "trivial", "n": 5}"#);
        assert_eq!((g.order(), g.degree(), d.as_str()), (1, 5, "triv(5)"));
    }

    #[test]
    fn explicit_generators() {
        let (g, d) = build(r#"{"degree": 3, "generators": ["(1 2 3)", "(1 2)"]}"#);
        assert_eq!(g.order(), 6);
        assert_eq!(d, "<(1 2 3),(1 2)>@3");
        let (g, _) = build(r#"{"degree": 4, "generators": []}"#);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn nested_constructors() {
        let (g, d) = build(
            r#"{"constructor": "external_product",
                "factors": [{"constructor": "symmetric", "n": 3},
                            {"constructor": "cyclic", "n": 2}]}"#,
        );
        assert_eq!((g.order(), g.degree(), d.as_str()), (12, 6, "S3 x C2"));

        let (g, d) = build(
            r#"{"constructor": "wreath",
                "inner": {"constructor": "symmetric", "n": 3},
                "outer": {"constructor": "symmetric", "n": 2}}"#,
        );
        assert_eq!((g.order(), g.degree(), d.as_str()), (72, 6, "S3 wr S2"));

        let (g, d) = build(
            r#"{"constructor": "k_subsets", "k": 2,
                "inner": {"constructor": "alternating", "n": 5}}"#,
        );
        assert_eq!((g.order(), g.degree(), d.as_str()), (60, 10, "A5 on 2-subsets"));

        let (g, d) = build(
            r#"{"constructor": "left_regular",
                "inner": {"constructor": "symmetric", "n": 3}}"#,
        );
        assert_eq!((g.order(), g.degree(), d.as_str()), (6, 6, "reg(S3)"));

        let (g, d) = build(
            r#"{"constructor": "internal_product",
                "factors": [{"constructor": "cyclic", "n": 2},
                            {"constructor": "cyclic", "n": 2},
                            {"constructor": "cyclic", "n": 2}]}"#,
        );
        assert_eq!((g.order(), g.degree(), d.as_str()), (8, 6, "int(C2, C2, C2)"));
    }

    #[test]
    fn missing_fields_are_rejected() {
        let spec = GroupSpec::from_json(r#"{"constructor": "symmetric"}"#).unwrap();
        let err = spec.build(DEFAULT_ELEMENT_CAP).unwrap_err();
        assert!(err.to_string().contains('n'), "{err}");
        let spec = GroupSpec::from_json(r#"{"constructor": "wreath"}"#).unwrap();
        assert!(spec.build(DEFAULT_ELEMENT_CAP).is_err());
        let spec =
            GroupSpec::from_json(r#"{"constructor": "external_product", "factors": []}"#).unwrap();
        assert!(spec.build(DEFAULT_ELEMENT_CAP).is_err());
    }

    #[test]
    fn malformed_json_and_cycles_are_rejected() {
        assert!(GroupSpec::from_json(r#"{"constructor": "frobnicate", "n": 3}"#).is_err());
        assert!(GroupSpec::from_json("not json").is_err());
        let spec =
            GroupSpec::from_json(r#"{"degree": 3, "generators": ["(1 5)"]}"#).unwrap();
        assert!(spec.build(DEFAULT_ELEMENT_CAP).is_err());
    }

    #[test]
    fn specs_round_trip_through_json() {
        let text = r#"{"constructor": "wreath",
            "inner": {"degree": 2, "generators": ["(1 2)"]},
            "outer": {"constructor": "symmetric", "n": 2}}"#;
        let spec = GroupSpec::from_json(text).unwrap();
        let again = GroupSpec::from_json(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(spec, again);
    }
}
