"""YARTS stand-alone claim verifier."""
