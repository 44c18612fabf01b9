import json
import os

path = os.path.dirname(__file__)

#published numbers of connected graphs on n unlabeled vertices
with open(os.path.join(path, "connected_counts.json"),'r') as f:
    connected_counts = dict((int(n), count) for n, count in json.load(f).items())

#graph6 of the families in their documented vertex numbering
with open(os.path.join(path, "named_graph6.json"),'r') as f:
    named_graph6 = json.load(f)
