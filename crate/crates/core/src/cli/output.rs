//! Plain, CSV and JSON renderings of result records.

use std::io::{self, Write};

use clap::ValueEnum;
use num_bigint::BigInt;
use serde::ser::{Serialize, SerializeMap, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Operator,
    ClosedForm,
    BruteForce,
}

impl Route {
    pub fn tag(self) -> &'static str {
        match self {
            Route::Operator => "operator",
            Route::ClosedForm => "closed-form",
            Route::BruteForce => "brute-force",
        }
    }
}

/// One computed value with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutputRecord {
    pub params: Vec<(&'static str, i64)>,
    pub value: BigInt,
    pub route: Route,
}

impl Serialize for OutputRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.params.len() + 2))?;
        for (name, value) in &self.params {
            map.serialize_entry(name, value)?;
        }
        // decimal string: exact at any size
        map.serialize_entry("value", &self.value.to_string())?;
        map.serialize_entry("route", self.route.tag())?;
        map.end()
    }
}

pub fn write_records(out: &mut dyn Write, format: Format, records: &[OutputRecord]) -> io::Result<()> {
    match format {
        Format::Plain => {
            let line: Vec<String> = records.iter().map(|r| r.value.to_string()).collect();
            writeln!(out, "{}", line.join(" "))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if let Some(first) = records.first() {
                let mut header: Vec<&str> = first.params.iter().map(|(n, _)| *n).collect();
                header.push("value");
                w.write_record(&header)?;
            }
            for r in records {
                let mut row: Vec<String> = r.params.iter().map(|(_, v)| v.to_string()).collect();
                row.push(r.value.to_string());
                w.write_record(&row)?;
            }
            w.flush()
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)
        }
    }
}
