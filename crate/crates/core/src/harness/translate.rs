//! External back-translation hook.
//!
//! The command runs once under `sh -c`. It receives one absolute-or-resolved pose file
//! path per line on stdin and must print exactly one sentence per line on stdout, in
//! the same order, then exit with status 0.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use super::error::HarnessError;

pub fn run_translation_hook(command: &str, poses: &[(String, PathBuf)]) -> Result<Vec<(String, String)>, HarnessError> {
    let mut child = Command::new("sh")
        .arg("-c")
        .arg(command)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::inherit())
        .spawn()
        .map_err(|e| HarnessError::Translate(format!("cannot start `{command}`: {e}")))?;

    let input: String = poses
        .iter()
        .map(|(_, p)| format!("{}\n", p.display()))
        .collect();
    let mut stdin = child.stdin.take().expect("stdin is piped");
    let writer = std::thread::spawn(move || stdin.write_all(input.as_bytes()));
    let output = child
        .wait_with_output()
        .map_err(|e| HarnessError::Translate(e.to_string()))?;
    // a hook may exit without reading all of stdin; its exit status decides
    let _ = writer.join();
    if !output.status.success() {
        return Err(HarnessError::Translate(format!("`{command}` exited with {}", output.status)));
    }
    let stdout = String::from_utf8(output.stdout)
        .map_err(|_| HarnessError::Translate("hook output is not UTF-8".into()))?;
    let lines: Vec<&str> = stdout.lines().collect();
    if lines.len() != poses.len() {
        return Err(HarnessError::Translate(format!(
            "expected {} sentences, hook printed {}",
            poses.len(),
            lines.len()
        )));
    }
    Ok(poses
        .iter()
        .zip(lines)
        .map(|((id, _), s)| (id.clone(), s.to_string()))
        .collect())
}
