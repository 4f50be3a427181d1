//! Every check name a certificate can emit must appear in the schema
//! reference document.

use sporadic_core::report::documented_check_names;

const SCHEMA_DOC: &str = include_str!("../../../docs/certificates.md");

#[test]
fn all_check_names_are_documented() {
    let mut missing = Vec::new();
    for name in documented_check_names() {
        // the shared SIC suite is documented once by its prefix form
        let lookup = name.strip_prefix("sic/").map(|s| format!("sic/{}", s));
        let needle = format!("`{}`", lookup.as_deref().unwrap_or(&name));
        if !SCHEMA_DOC.contains(&needle) {
            missing.push(name);
        }
    }
    assert!(
        missing.is_empty(),
        "checks missing from docs/certificates.md: {:?}",
        missing
    );
}
