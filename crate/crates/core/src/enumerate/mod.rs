//! Exhaustive generation, catalog derivation and verification campaigns.

pub mod catalog;
pub mod generate;
pub mod verify;

pub use catalog::{read_catalog, render_catalog, write_catalog, CatalogEntry, CatalogKind};
pub use generate::{generate_3connected, Generator};
pub use verify::{
    catalogs_between, derive_catalogs, lemma_audit, run_campaign, verify_theorems, CampaignConfig, Check, CheckResult,
    Status, VerificationReport,
};
