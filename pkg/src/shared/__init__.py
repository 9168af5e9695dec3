"""Cross-cutting core: config, schemas and the application exceptions."""
