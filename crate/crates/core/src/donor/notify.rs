use std::fs;
use std::path::Path;

use super::{BloodGroup, QueryResult};
use crate::error::{Error, Result};
use crate::io::write_atomic;

pub fn subject_line(blood_group: BloodGroup, location: &str) -> String {
    format!("Blood donation request: {blood_group} at {location}")
}

/// `To:` line, `Subject:` line, a blank line, then `body` unchanged.
pub fn format_message(mail_id: &str, subject: &str, body: &str) -> String {
    format!("To: {mail_id}\nSubject: {subject}\n\n{body}")
}

/// Writes one `<donor_id>.msg` file per matched donor into `outbox` and returns
/// how many were written. Nothing is sent anywhere; with no matches the outbox
/// is left untouched.
pub fn compose_notifications(result: &QueryResult, body: &str, outbox: &Path) -> Result<usize> {
    if result.matched.is_empty() {
        return Ok(0);
    }
    fs::create_dir_all(outbox).map_err(|e| Error::io(outbox, e))?;
    let subject = subject_line(result.blood_group, &result.location);
    for donor in &result.matched {
        let path = outbox.join(format!("{}.msg", donor.donor_id));
        write_atomic(&path, format_message(&donor.mail_id, &subject, body).as_bytes())?;
    }
    Ok(result.matched.len())
}
