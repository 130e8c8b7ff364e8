//! Staged output writing: every file lands via a temp-then-rename in the
//! target directory, and nothing is renamed until the whole batch has
//! been staged, so a failing run leaves no partial outputs behind.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};

pub struct OutputBatch {
    dir: PathBuf,
    staged: Vec<(PathBuf, PathBuf)>,
}

impl OutputBatch {
    pub fn new(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir)
            .with_context(|| format!("cannot create output directory {}", dir.display()))?;
        Ok(Self {
            dir: dir.to_path_buf(),
            staged: Vec::new(),
        })
    }

    pub fn stage(&mut self, name: &str, content: &str) -> Result<()> {
        let tmp = self.dir.join(format!(".{name}.tmp"));
        fs::write(&tmp, content).with_context(|| format!("cannot write {}", tmp.display()))?;
        self.staged.push((tmp, self.dir.join(name)));
        Ok(())
    }

    /// Renames every staged file into place.
    pub fn commit(mut self) -> Result<Vec<PathBuf>> {
        let mut written = Vec::new();
        for (tmp, target) in self.staged.drain(..) {
            fs::rename(&tmp, &target)
                .with_context(|| format!("cannot move output into {}", target.display()))?;
            written.push(target);
        }
        Ok(written)
    }
}

impl Drop for OutputBatch {
    fn drop(&mut self) {
        for (tmp, _) in &self.staged {
            let _ = fs::remove_file(tmp);
        }
    }
}
