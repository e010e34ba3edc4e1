"""
A scripted classroom session over the HTTP API
==============================================

Everything the interactive front end does goes through the local JSON
API: create a session, submit attempts (the server replays and classifies
the traces itself), and pull the teacher summary.
"""

import json
import tempfile
import urllib.request

from suanpan.api import make_server, serve_in_background

server = make_server(port=0, data_dir=tempfile.mkdtemp(prefix="suanpan-demo-"))
serve_in_background(server)
host, port = server.server_address[:2]
base = f"http://{host}:{port}"
print("serving on", base)


def call(method, path, payload=None):
    data = json.dumps(payload).encode() if payload is not None else None
    request = urllib.request.Request(base + path, data=data, method=method)
    with urllib.request.urlopen(request) as response:
        return json.loads(response.read())


session = call("POST", "/sessions", {"participant": "eleve-07"})
print("session:", session["id"])

# to set 8 on the material abacus, five plus a block of three
verdict = call(
    "POST",
    f"/sessions/{session['id']}/attempts",
    {
        "task": {"kind": "set_number", "target": 8, "register": "material_abacus", "rod_count": 1},
        "trace": {
            "register": "material_abacus",
            "gestures": [
                {"type": "move_upper", "rod": 0, "delta": 1},
                {"type": "move_lower", "rod": 0, "delta": 3},
            ],
        },
    },
)
print("set 8:", "correct" if verdict["correct"] else "incorrect", "-", verdict["report"]["formula"])

# to set and say 73 in French
verdict = call(
    "POST",
    f"/sessions/{session['id']}/attempts",
    {
        "task": {"kind": "set_and_say", "target": 73, "language": "french",
                 "register": "virtual_abacus", "rod_count": 2},
        "trace": {
            "register": "virtual_abacus",
            "gestures": [
                {"type": "click_upper", "rod": 1, "index": 1},
                {"type": "click_lower", "rod": 1, "index": 2},
                {"type": "click_lower", "rod": 0, "index": 3},
            ],
        },
        "answer": "soixante-treize",
    },
)
print("set-and-say 73:", "correct" if verdict["correct"] else "incorrect")

report = call("GET", f"/sessions/{session['id']}/report")
print("\nteacher summary:", json.dumps(report, indent=2))

server.shutdown()
