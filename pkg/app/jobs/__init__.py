# Run-directory bookkeeping helpers.
from .manager import JobPaths, create_job, read_meta, update_meta, write_meta

__all__ = ["JobPaths", "create_job", "read_meta", "update_meta", "write_meta"]
