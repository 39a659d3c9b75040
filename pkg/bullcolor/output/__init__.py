from . import text, cert, json, xml, dot
