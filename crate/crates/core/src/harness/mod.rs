//! Named verification campaigns, their reports, and the on-disk prefix
//! cache used by the command-line front end.

mod cache;
mod campaign;
mod conjectures;
mod registry;

pub use cache::{cache_load, cache_path, cache_store, load_or_compute, CachedPrefix, Family};
pub use campaign::{exit_code, Bounds, CampaignReport, Outcome, Severity, Status};
pub use registry::{campaigns, find, replay, run_campaign, Campaign};
