//! CSV and markdown renderings of benchmark records.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::{BenchRecord, Codec, Workload};

pub const CSV_HEADER: &str = "workload,codec,m,size_bytes,mib_per_s,samples,seed";

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        writeln!(
            out,
            "{},{},{},{},{:.3},{},{:#x}",
            r.workload.as_str(),
            r.codec.as_str(),
            r.m,
            r.size,
            r.mib_per_s,
            r.samples,
            r.seed
        )
        .unwrap();
    }
    out
}

fn size_label(size: usize) -> String {
    if size >= 1024 && size % 1024 == 0 {
        format!("{} KiB", size / 1024)
    } else {
        format!("{size} B")
    }
}

fn workload_label(w: Workload) -> &'static str {
    match w {
        Workload::Encode => "Encode",
        Workload::Decode => "Decode",
        Workload::EncodeText => "Encode text",
        Workload::DecodeText => "Decode text",
    }
}

/// A throughput table with one row per (workload, size) and one column per
/// (codec, modulus), in MiB/s.
pub fn to_markdown(records: &[BenchRecord]) -> String {
    let columns: BTreeSet<(Codec, u64)> = records.iter().map(|r| (r.codec, r.m)).collect();
    let rows: BTreeSet<(Workload, usize)> = records.iter().map(|r| (r.workload, r.size)).collect();

    let mut out = String::new();
    out.push_str("| Workload |");
    for (codec, m) in &columns {
        let name = match codec {
            Codec::Native => "Native",
            Codec::Oracle => "Oracle",
        };
        write!(out, " {name} m={m} |").unwrap();
    }
    out.push_str("\n|---|");
    for _ in &columns {
        out.push_str("---:|");
    }
    out.push('\n');
    for (workload, size) in &rows {
        write!(out, "| {} {} |", workload_label(*workload), size_label(*size)).unwrap();
        for (codec, m) in &columns {
            let cell = records.iter().find(|r| {
                r.workload == *workload && r.size == *size && r.codec == *codec && r.m == *m
            });
            match cell {
                Some(r) => write!(out, " {:.3} |", r.mib_per_s).unwrap(),
                None => out.push_str(" — |"),
            }
        }
        out.push('\n');
    }
    if let Some(r) = records.first() {
        writeln!(
            out,
            "\nMedian of {} samples per cell; uniform random bytes (mixed UTF-8 for text rows) from seed {:#x}.",
            r.samples, r.seed
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(workload: Workload, codec: Codec, m: u64, size: usize, v: f64) -> BenchRecord {
        BenchRecord {
            workload,
            codec,
            m,
            size,
            mib_per_s: v,
            samples: 10,
            seed: 42,
        }
    }

    #[test]
    fn csv_columns() {
        let csv = to_csv(&[rec(Workload::Encode, Codec::Native, 65, 1024, 163.6)]);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        assert_eq!(lines.next(), Some("encode,native,65,1024,163.600,10,0x2a"));
        assert_eq!(lines.next(), None);
    }

    #[test]
    fn markdown_shape() {
        let records = [
            rec(Workload::Encode, Codec::Native, 65, 1024, 1.0),
            rec(Workload::Encode, Codec::Oracle, 65, 1024, 2.0),
            rec(Workload::Decode, Codec::Native, 257, 65536, 3.0),
        ];
        let md = to_markdown(&records);
        let lines: Vec<&str> = md.lines().collect();
        assert_eq!(lines[0], "| Workload | Native m=65 | Native m=257 | Oracle m=65 |");
        assert_eq!(lines[2], "| Encode 1 KiB | 1.000 | — | 2.000 |");
        assert_eq!(lines[3], "| Decode 64 KiB | — | 3.000 | — |");
    }
}
