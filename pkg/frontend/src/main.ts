import { initApp } from "./app.js";

const root = document.getElementById("app");
if (root) initApp(root);
