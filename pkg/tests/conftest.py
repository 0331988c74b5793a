# Anchors the tests directory on sys.path so oracle helpers import plainly.
