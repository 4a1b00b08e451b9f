import { ApiClient } from './api.js';
import { AdvisePanel, ChatSession } from './state.js';
import { renderAdvise, renderChat } from './views.js';
const params = new URLSearchParams(window.location.search);
const baseUrl = params.get('api') ?? 'http://127.0.0.1:8080';
const client = new ApiClient(baseUrl);
const session = new ChatSession(client);
const panel = new AdvisePanel(client);
renderChat(document.getElementById('chat'), session);
renderAdvise(document.getElementById('advise'), panel);
