import os
import tempfile


def atomic_write(path: str, text: str):
    """Write through a temporary file in the target directory, then rename over path."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, temporary_path = tempfile.mkstemp(prefix=".graphbench.", dir=directory)
    try:
        with os.fdopen(fd, 'w') as output:
            output.write(text)
        os.replace(temporary_path, path)
    except BaseException:
        if os.path.exists(temporary_path):
            os.unlink(temporary_path)
        raise
