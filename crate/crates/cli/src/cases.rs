//! Golden input documents from the `cases/` tree, compiled in.

macro_rules! case {
    ($path:literal) => {
        ($path, include_str!(concat!("../../../cases/", $path)))
    };
}

pub const ALL: &[(&str, &str)] = &[
    case!("monomial/maxideal1.json"),
    case!("monomial/maxideal2.json"),
    case!("monomial/maxideal3.json"),
    case!("monomial/s3t4.json"),
    case!("monomial/s3t30.json"),
    case!("monomial/s9t10.json"),
    case!("monomial/st.json"),
    case!("monomial/x3y3.json"),
    case!("monomial/x3y3xy.json"),
    case!("poly/s3t4.json"),
    case!("poly/saito.json"),
    case!("poly/smooth_linear.json"),
    case!("poly/x2y3.json"),
    case!("roots/s3t4_extra_roots.json"),
    case!("roots/s3t4_roots.json"),
    case!("families/hyperbola.json"),
    case!("families/mu_3_2.json"),
    case!("families/mu_5_2_1.json"),
];

/// Contents of a golden case by its path under `cases/`.
pub fn get(path: &str) -> &'static str {
    ALL.iter()
        .find(|(p, _)| *p == path)
        .map(|(_, text)| *text)
        .unwrap_or_else(|| panic!("no golden case {path}"))
}
