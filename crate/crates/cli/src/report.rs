//! The JSON envelope every command wraps its payload in. Field order is
//! fixed by the struct, so two runs of the same command produce identical
//! bytes except for the wall-time field.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEnvelope {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub command: String,
    pub spec_fingerprint: String,
    pub verdict: String,
    pub summary: String,
    pub gb_reverified: bool,
    pub wall_time_ms: u128,
    pub payload: serde_json::Value,
}

impl ReportEnvelope {
    pub fn new(
        command: String,
        spec_fingerprint: String,
        verdict: String,
        summary: String,
        gb_reverified: bool,
        wall_time_ms: u128,
        payload: serde_json::Value,
    ) -> ReportEnvelope {
        ReportEnvelope {
            schema_version: SCHEMA_VERSION,
            tool: ToolInfo {
                name: env!("CARGO_PKG_NAME"),
                version: env!("CARGO_PKG_VERSION"),
            },
            command,
            spec_fingerprint,
            verdict,
            summary,
            gb_reverified,
            wall_time_ms,
            payload,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope serializes");
        s.push('\n');
        s
    }
}

/// Exit code for a verdict string, per the documented code table.
pub fn exit_code_for(verdict: &str) -> i32 {
    match verdict {
        "OK" | "PASS" | "MATCHES_THEOREM" => 0,
        "PARTIAL" => 4,
        "INAPPLICABLE" => 5,
        _ => 1,
    }
}
