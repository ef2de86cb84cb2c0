//! Blood donor records: ingestion, numeric encoding, cluster queries and
//! notification files.

mod encode;
mod load;
mod notify;
mod query;

use std::fmt;
use std::str::FromStr;

pub use encode::{encode_donors, CategoryEncoding, EncodedDonors, DONOR_FEATURES};
pub use load::{format_donors, load_donors, parse_donors, read_donors, DONOR_HEADER};
pub use notify::{compose_notifications, format_message, subject_line};
pub use query::{query_donors, QueryResult};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BloodGroup {
    APos,
    ANeg,
    AbPos,
    AbNeg,
    BPos,
    BNeg,
    OPos,
    ONeg,
}

impl BloodGroup {
    /// All groups, sorted by their canonical text.
    pub const ALL: [BloodGroup; 8] = [
        BloodGroup::APos,
        BloodGroup::ANeg,
        BloodGroup::AbPos,
        BloodGroup::AbNeg,
        BloodGroup::BPos,
        BloodGroup::BNeg,
        BloodGroup::OPos,
        BloodGroup::ONeg,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BloodGroup::APos => "A+",
            BloodGroup::ANeg => "A-",
            BloodGroup::AbPos => "AB+",
            BloodGroup::AbNeg => "AB-",
            BloodGroup::BPos => "B+",
            BloodGroup::BNeg => "B-",
            BloodGroup::OPos => "O+",
            BloodGroup::ONeg => "O-",
        }
    }
}

impl fmt::Display for BloodGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BloodGroup {
    type Err = Error;

    /// Case-insensitive, surrounding whitespace ignored.
    fn from_str(s: &str) -> Result<Self> {
        let normalized = s.trim().to_ascii_uppercase();
        BloodGroup::ALL
            .into_iter()
            .find(|g| g.as_str() == normalized)
            .ok_or_else(|| Error::UnknownBloodGroup(s.trim().to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DonorRecord {
    pub donor_id: String,
    pub name: String,
    pub age: u32,
    pub blood_group: BloodGroup,
    pub location: String,
    pub mail_id: String,
}

impl DonorRecord {
    /// Checks the invariants that the type system does not carry.
    pub fn validate(&self) -> Result<()> {
        let id = &self.donor_id;
        if id.is_empty() || id == "." || id == ".." {
            return Err(Error::InvalidDonor(format!("invalid donor_id {id:?}")));
        }
        if !id
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '-' | '_' | '.'))
        {
            return Err(Error::InvalidDonor(format!(
                "donor_id {id:?} may only contain letters, digits, '-', '_' and '.'"
            )));
        }
        if self.location.is_empty() {
            return Err(Error::InvalidDonor(format!("donor {id:?} has an empty location")));
        }
        if self.mail_id.matches('@').count() != 1 {
            return Err(Error::InvalidDonor(format!(
                "mail_id {:?} must contain exactly one '@'",
                self.mail_id
            )));
        }
        Ok(())
    }
}
