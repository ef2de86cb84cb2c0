use std::collections::HashSet;
use std::io::Read;
use std::path::Path;

use super::{BloodGroup, DonorRecord};
use crate::error::{Error, Result};
use crate::io::{data_lines, header_line, read_to_string, split_fields};

pub const DONOR_HEADER: &str = "donor_id,name,age,blood_group,location,mail_id";

fn parse_record(line: &str, lineno: usize) -> Result<DonorRecord> {
    let fields = split_fields(line, lineno)?;
    if fields.len() != 6 {
        return Err(Error::parse(
            lineno,
            format!("expected 6 fields, found {}", fields.len()),
        ));
    }
    let age = fields[2]
        .parse::<u32>()
        .map_err(|_| Error::parse(lineno, format!("invalid age {:?}", fields[2])))?;
    let blood_group: BloodGroup = fields[3].parse().map_err(|e: Error| e.at_line(lineno))?;
    let record = DonorRecord {
        donor_id: fields[0].to_string(),
        name: fields[1].to_string(),
        age,
        blood_group,
        location: fields[4].to_string(),
        mail_id: fields[5].to_string(),
    };
    record.validate().map_err(|e| e.at_line(lineno))?;
    Ok(record)
}

/// Parses donor file text: the exact header line, then one record per line.
pub fn parse_donors(text: &str) -> Result<Vec<DonorRecord>> {
    match header_line(text) {
        Some(h) if h == DONOR_HEADER => {}
        Some(h) => {
            return Err(Error::parse(
                1,
                format!("expected header `{DONOR_HEADER}`, found `{h}`"),
            ))
        }
        None => return Err(Error::parse(1, "empty donor file")),
    }
    let mut seen = HashSet::new();
    let mut records = Vec::new();
    for (lineno, line) in data_lines(text) {
        let record = parse_record(line, lineno)?;
        if !seen.insert(record.donor_id.clone()) {
            return Err(Error::DuplicateDonor(record.donor_id).at_line(lineno));
        }
        records.push(record);
    }
    Ok(records)
}

pub fn load_donors<R: Read>(mut source: R) -> Result<Vec<DonorRecord>> {
    let mut text = String::new();
    source
        .read_to_string(&mut text)
        .map_err(|e| Error::io("<input>", e))?;
    parse_donors(&text)
}

pub fn read_donors(path: &Path) -> Result<Vec<DonorRecord>> {
    parse_donors(&read_to_string(path)?).map_err(|e| e.with_source_name(path))
}

/// Renders records in the donor file format, header included.
pub fn format_donors(records: &[DonorRecord]) -> String {
    let mut out = String::from(DONOR_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.donor_id, r.name, r.age, r.blood_group, r.location, r.mail_id
        ));
    }
    out
}
