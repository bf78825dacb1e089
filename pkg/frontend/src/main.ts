import { Client } from "./api.js";
import { mountApp } from "./ui.js";

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app element");
}
mountApp(root, new Client(""));
